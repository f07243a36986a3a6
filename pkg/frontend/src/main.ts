// Wires the three-step workflow to the DOM.  No geometry happens here:
// every fact, coordinate, and phrase on screen came out of the service.

import { Api, ServiceError } from "./api";
import { drawDiagram } from "./diagram";
import { dotFilename, triggerDownload } from "./dot";
import { Lookup, makeLookup, tooltipFor } from "./i18n";
import { renderDag, renderText } from "./proofview";
import * as st from "./state";
import { CatalogResponse } from "./types";

const KNOWN_LANGS = ["en", "de"];
const DEBOUNCE_MS = 300;

const $ = <T extends HTMLElement>(id: string): T =>
  document.getElementById(id) as T;

let state = st.initialState();
let catalogs = new Map<string, CatalogResponse>();
const api = new Api("");

function chain(): CatalogResponse[] {
  const active = catalogs.get(state.lang);
  const english = catalogs.get("en");
  const list = [];
  if (active) list.push(active);
  if (english && english !== active) list.push(english);
  return list;
}

function update(next: st.SessionState): void {
  state = next;
  render();
}

function labelled(tr: Lookup): void {
  $("prove-btn").textContent = tr("Prove");
  $("step1-title").textContent = `1. ${tr("Construction")}`;
  $("step2-title").textContent = `2. ${tr("Properties")}`;
  $("step3-title").textContent = `3. ${tr("Proof")}`;
  $("structure-label-text").textContent = tr("Show structure");
  $("download-btn").textContent = tr("Download DOT");
}

function render(): void {
  const tr = makeLookup(chain());
  const banner = $("banner");
  banner.hidden = state.banner === null;
  banner.querySelector("span")!.textContent = state.banner ?? "";

  labelled(tr);
  const step = st.currentStep(state);
  $("step1").classList.toggle("active", step === 1);
  $("step2").classList.toggle("active", step === 2);
  $("step3").classList.toggle("active", step === 3);

  const diag = $("parse-error");
  diag.textContent = state.parseError ?? "";
  diag.hidden = state.parseError === null;

  if (state.parse) {
    drawDiagram($("canvas") as HTMLCanvasElement, state.parse);
  }

  const list = $("candidates");
  list.textContent = "";
  for (const c of state.candidates) {
    const li = document.createElement("li");
    const btn = document.createElement("button");
    btn.textContent = `${tr("Show")}: ${c.fact}`;
    btn.classList.toggle("selected", state.selectedGoal === c.fact);
    btn.onclick = () => {
      update(st.selectGoal(state, c.fact));
      void prove();
    };
    li.appendChild(btn);
    list.appendChild(li);
  }

  const proofEl = $("proof");
  const dagEl = $("dag");
  if (state.proof && state.proof.status === "proved") {
    renderText(proofEl, state.proof);
    renderDag($("dag"), state.proof.dag, tr, (key) => tooltipFor(chain(), key));
    dagEl.hidden = $("view-mode-dag") === null ? true : !($("view-mode-dag") as HTMLInputElement).checked;
    proofEl.hidden = !dagEl.hidden;
  } else if (state.proof) {
    proofEl.textContent = state.proof.rendering || state.proof.diagnostics;
    proofEl.hidden = false;
    dagEl.hidden = true;
  }
}

async function reparse(): Promise<void> {
  try {
    const parse = await api.parse(state.source);
    const detect = await api.detect(state.source);
    update(st.withCandidates(st.withParse(state, parse), detect.candidates));
  } catch (err) {
    if (err instanceof ServiceError) {
      update(st.withParseError(state, err.message));
    } else {
      update(st.withBanner(state, "service unreachable"));
    }
  }
}

async function prove(): Promise<void> {
  try {
    const proof = await api.prove(st.proveRequest(state));
    update(st.withProof(state, proof));
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") return;
    if (err instanceof ServiceError) {
      update(st.withParseError(state, err.message));
    } else {
      update(st.withBanner(state, "service unreachable"));
    }
  }
}

async function downloadDot(): Promise<void> {
  const proof = await api.prove(st.proveRequest(state, "dot"));
  if (proof.status === "proved") {
    triggerDownload(proof.rendering, dotFilename(state.selectedGoal));
  }
}

function bind(): void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  const editor = $("source") as HTMLTextAreaElement;
  editor.oninput = () => {
    update(st.withSource(state, editor.value));
    clearTimeout(timer);
    timer = setTimeout(() => void reparse(), DEBOUNCE_MS);
  };

  $("prove-btn").onclick = () => void prove();
  $("download-btn").onclick = () => void downloadDot();

  const langSel = $("lang") as HTMLSelectElement;
  langSel.onchange = () => {
    update(st.setLanguage(state, langSel.value));
    if (state.proof) void prove(); // re-render phrases server-side too
  };

  const structure = $("structure-toggle") as HTMLInputElement;
  structure.onchange = () => {
    update(st.toggleStructure(state));
    if (state.proof) void prove();
  };

  const viewDag = $("view-mode-dag") as HTMLInputElement;
  viewDag.onchange = () => render();

  $("banner-retry").onclick = () => {
    update(st.withBanner(state, null));
    void boot();
  };
}

async function boot(): Promise<void> {
  try {
    const served = await api.availableLanguages(KNOWN_LANGS);
    for (const tag of served) catalogs.set(tag, await api.catalog(tag));
    const langSel = $("lang") as HTMLSelectElement;
    langSel.textContent = "";
    for (const tag of served) {
      const opt = document.createElement("option");
      opt.value = tag;
      opt.textContent = tag;
      langSel.appendChild(opt);
    }
    update(st.setLanguages(state, served));
  } catch {
    update(st.withBanner(state, "service unreachable"));
  }
}

bind();
void boot();
