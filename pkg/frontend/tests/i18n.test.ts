import { describe, expect, it } from "vitest";

import { makeLookup, tooltipFor } from "../src/i18n";
import { CatalogResponse } from "../src/types";

const DE: CatalogResponse = {
  language: "de",
  entries: [
    { id: 1, key: "Prove", text: "Beweisen", tooltip: "Startet den Beweis" },
    { id: 2, key: "by HYP", text: "nach Voraussetzung", tooltip: null },
    { id: 3, key: "Show structure", text: "", tooltip: null },
  ],
};

const EN: CatalogResponse = {
  language: "en",
  entries: [
    { id: 1, key: "Prove", text: "Prove", tooltip: "Runs the prover" },
    { id: 3, key: "Show structure", text: "Show structure", tooltip: null },
  ],
};

describe("phrase lookup", () => {
  const tr = makeLookup([DE, EN]);

  it("prefers the first catalog with a nonempty text", () => {
    expect(tr("Prove")).toBe("Beweisen");
    expect(tr("by HYP")).toBe("nach Voraussetzung");
  });

  it("falls through empty entries to the baseline", () => {
    expect(tr("Show structure")).toBe("Show structure");
  });

  it("is total: unknown keys come back verbatim", () => {
    expect(tr("never seen before")).toBe("never seen before");
    expect(makeLookup([])("anything")).toBe("anything");
  });
});

describe("tooltips", () => {
  it("walks the chain like text lookup does", () => {
    expect(tooltipFor([DE, EN], "Prove")).toBe("Startet den Beweis");
    expect(tooltipFor([EN], "Prove")).toBe("Runs the prover");
    expect(tooltipFor([DE, EN], "by HYP")).toBeNull();
    expect(tooltipFor([DE, EN], "missing")).toBeNull();
  });
});
