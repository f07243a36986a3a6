// Client-side phrase lookup, mirroring the service's fallback semantics:
// first catalog with a nonempty text wins, otherwise the key itself.

import { CatalogResponse } from "./types";

export type Lookup = (key: string) => string;

export function makeLookup(chain: CatalogResponse[]): Lookup {
  const maps = chain.map((cat) => {
    const m = new Map<string, string>();
    for (const e of cat.entries) m.set(e.key, e.text);
    return m;
  });
  return (key) => {
    for (const m of maps) {
      const text = m.get(key);
      if (text !== undefined && text !== "") return text;
    }
    return key;
  };
}

export function tooltipFor(chain: CatalogResponse[], key: string): string | null {
  for (const cat of chain) {
    for (const e of cat.entries) {
      if (e.key === key && e.tooltip) return e.tooltip;
    }
  }
  return null;
}
