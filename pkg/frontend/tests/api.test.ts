import { describe, expect, it } from "vitest";

import { Api, FetchLike, ServiceError } from "../src/api";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

function recordingFetch(replies: Array<(url: string, init?: RequestInit) => Response>) {
  const calls: Array<{ url: string; init?: RequestInit }> = [];
  const impl: FetchLike = async (url, init) => {
    calls.push({ url, init });
    const reply = replies[Math.min(calls.length - 1, replies.length - 1)];
    return reply(url, init);
  };
  return { impl, calls };
}

describe("request shapes", () => {
  it("posts the construction source to /api/parse", async () => {
    const { impl, calls } = recordingFetch([
      () => jsonResponse({ points: [], steps: [], goals: [] }),
    ]);
    await new Api("http://x", impl).parse("point A", 7);
    expect(calls[0].url).toBe("http://x/api/parse");
    expect(calls[0].init?.method).toBe("POST");
    expect(JSON.parse(String(calls[0].init?.body))).toEqual({ source: "point A", seed: 7 });
  });

  it("maps non-2xx JSON onto ServiceError with the detail text", async () => {
    const { impl } = recordingFetch([
      () => jsonResponse({ detail: "line 2: unknown keyword 'frob'" }, 422),
    ]);
    const err = await new Api("", impl).parse("x").catch((e) => e);
    expect(err).toBeInstanceOf(ServiceError);
    expect(err.message).toContain("line 2");
    expect(err.status).toBe(422);
  });
});

describe("prove cancellation", () => {
  it("aborts the previous in-flight prove when a new one starts", async () => {
    const seen: AbortSignal[] = [];
    const impl: FetchLike = (_url, init) => {
      seen.push(init!.signal!);
      return new Promise((resolve, reject) => {
        init!.signal!.addEventListener("abort", () =>
          reject(new DOMException("aborted", "AbortError"))
        );
        if (seen.length === 2) {
          resolve(jsonResponse({ status: "proved", rendering: "", dag: [], ndgs: [], diagnostics: "" }));
        }
      });
    };
    const api = new Api("", impl);
    const first = api.prove({ source: "a" });
    const second = api.prove({ source: "b" });
    await expect(first).rejects.toHaveProperty("name", "AbortError");
    await expect(second).resolves.toHaveProperty("status", "proved");
    expect(seen[0].aborted).toBe(true);
    expect(seen[1].aborted).toBe(false);
  });
});

describe("language probing", () => {
  it("keeps the tags the service serves and skips 404s", async () => {
    const { impl } = recordingFetch([
      (url) =>
        url.endsWith("/en")
          ? jsonResponse({ language: "en", entries: [] })
          : jsonResponse({ detail: "no catalog" }, 404),
    ]);
    const served = await new Api("", impl).availableLanguages(["en", "zz"]);
    expect(served).toEqual(["en"]);
  });

  it("propagates network failure instead of hiding it", async () => {
    const impl: FetchLike = async () => {
      throw new TypeError("fetch failed");
    };
    await expect(new Api("", impl).availableLanguages(["en"])).rejects.toThrow(
      "fetch failed"
    );
  });
});
