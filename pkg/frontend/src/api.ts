// Thin typed client for the prover service.  All geometry lives server-side;
// this module only moves JSON and keeps at most one prove request in flight.

import {
  CatalogResponse,
  DetectResponse,
  ParseResponse,
  ProveRequest,
  ProveResponse,
} from "./types";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

async function post<T>(fetchImpl: FetchLike, url: string, body: unknown, signal?: AbortSignal): Promise<T> {
  const res = await fetchImpl(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
    signal,
  });
  const payload = await res.json();
  if (!res.ok) {
    throw new ServiceError(String(payload.detail ?? res.status), res.status);
  }
  return payload as T;
}

export class Api {
  private proveController: AbortController | null = null;

  constructor(readonly base: string = "", readonly fetchImpl: FetchLike = fetch.bind(globalThis)) {}

  parse(source: string, seed = 0): Promise<ParseResponse> {
    return post(this.fetchImpl, `${this.base}/api/parse`, { source, seed });
  }

  detect(source: string, seed = 0): Promise<DetectResponse> {
    return post(this.fetchImpl, `${this.base}/api/detect`, { source, seed });
  }

  // Later prove calls cancel the one still running; the canceled promise
  // rejects with an AbortError the caller is expected to swallow.
  prove(req: ProveRequest): Promise<ProveResponse> {
    this.proveController?.abort();
    const controller = new AbortController();
    this.proveController = controller;
    return post(this.fetchImpl, `${this.base}/api/prove`, req, controller.signal);
  }

  async catalog(lang: string): Promise<CatalogResponse> {
    const res = await this.fetchImpl(`${this.base}/api/i18n/${lang}`);
    const payload = await res.json();
    if (!res.ok) {
      throw new ServiceError(String(payload.detail ?? res.status), res.status);
    }
    return payload as CatalogResponse;
  }

  // The languages the service actually serves, probed from a candidate list.
  async availableLanguages(tags: string[]): Promise<string[]> {
    const served: string[] = [];
    for (const tag of tags) {
      try {
        await this.catalog(tag);
        served.push(tag);
      } catch (err) {
        if (!(err instanceof ServiceError)) throw err; // network trouble is not a 404
      }
    }
    return served;
  }
}
