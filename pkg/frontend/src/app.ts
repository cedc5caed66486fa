/** Curation UI: run an expansion, review candidates, export the result.
 *
 * Decisions are posted to the backend immediately (optimistic update,
 * reconciled on the acknowledgement), so the exported files always match
 * what the server would produce. Re-expanding inside the same session
 * keeps every previous decision.
 */

import { ApiError, LexkitClient } from "./api.js";
import type { Decision, MethodsResponse } from "./api.js";
import {
  applyDecision, decidedCount, exportWordlistText, groupByStatus,
  parseSeedText, projectSession,
} from "./state.js";
import type { SessionView, Status } from "./state.js";

const DEFAULT_BASE =
  new URLSearchParams(window.location.search).get("api")
  ?? "http://127.0.0.1:8000";

// state
let client = new LexkitClient(DEFAULT_BASE);
let methodsInfo: MethodsResponse | null = null;
let view: SessionView | null = null;
let selectedWord: string | null = null;
let busy = false;

// elements
const apiInput = document.getElementById("api-base") as HTMLInputElement;
const methodSelect = document.getElementById("method") as HTMLSelectElement;
const langSelect = document.getElementById("lang") as HTMLSelectElement;
const langField = document.getElementById("lang-field")!;
const tauInput = document.getElementById("tau") as HTMLInputElement;
const tauField = document.getElementById("tau-field")!;
const seedsBox = document.getElementById("seeds") as HTMLTextAreaElement;
const expandBtn = document.getElementById("expand") as HTMLButtonElement;
const newSessionBtn =
  document.getElementById("new-session") as HTMLButtonElement;
const errorBanner = document.getElementById("error")!;
const unmatchedBanner = document.getElementById("unmatched")!;
const sessionLine = document.getElementById("session-line")!;
const countersEl = document.getElementById("counters")!;
const columns = document.getElementById("columns")!;
const exportListBtn =
  document.getElementById("export-list") as HTMLButtonElement;
const exportCsvBtn =
  document.getElementById("export-csv") as HTMLButtonElement;
const exportPreview = document.getElementById("export-preview")!;
const helpEl = document.getElementById("keyhelp")!;

apiInput.value = DEFAULT_BASE;

function showError(message: string) {
  errorBanner.textContent = message;
  errorBanner.hidden = false;
}

function clearError() {
  errorBanner.hidden = true;
  errorBanner.textContent = "";
}

function setBusy(value: boolean) {
  busy = value;
  expandBtn.disabled = value;
}

async function loadMethods() {
  clearError();
  methodSelect.innerHTML = "";
  try {
    methodsInfo = await client.methods();
  } catch (err) {
    methodsInfo = null;
    showError(err instanceof ApiError
      ? `cannot list methods: ${err.message}`
      : String(err));
    return;
  }
  for (const method of methodsInfo.methods) {
    const option = document.createElement("option");
    option.value = method;
    option.textContent = method;
    methodSelect.appendChild(option);
  }
  for (const [method, reason] of Object.entries(methodsInfo.unavailable)) {
    const option = document.createElement("option");
    option.value = method;
    option.textContent = `${method} (unavailable)`;
    option.disabled = true;
    option.title = reason;
    methodSelect.appendChild(option);
  }
  langSelect.innerHTML = "";
  for (const lang of methodsInfo.colex_languages) {
    const option = document.createElement("option");
    option.value = lang;
    option.textContent = lang;
    if (lang === methodsInfo.defaults.lang) option.selected = true;
    langSelect.appendChild(option);
  }
  tauInput.value = String(methodsInfo.defaults.tau);
  onMethodChange();
}

function onMethodChange() {
  const method = methodSelect.value;
  langField.hidden = method !== "colex";
  tauField.hidden = !method.startsWith("embedding");
}

function renderCandidate(candidate: { word: string; status: Status;
                                      isSeed: boolean }): HTMLElement {
  const row = document.createElement("li");
  row.className = `candidate ${candidate.status}`
    + (candidate.word === selectedWord ? " selected" : "");
  row.dataset.word = candidate.word;

  const label = document.createElement("span");
  label.className = "word";
  label.textContent = candidate.word;
  row.appendChild(label);
  if (candidate.isSeed) {
    const badge = document.createElement("span");
    badge.className = "badge";
    badge.textContent = "seed";
    row.appendChild(badge);
  }

  const actions = document.createElement("span");
  actions.className = "actions";
  for (const [decision, symbol, title] of
       [["accept", "✓", "accept (a)"], ["reject", "✗", "reject (x)"]] as
       Array<[Decision, string, string]>) {
    const button = document.createElement("button");
    button.textContent = symbol;
    button.title = title;
    button.className = decision;
    button.addEventListener("click", (event) => {
      event.stopPropagation();
      void decide(candidate.word, decision);
    });
    actions.appendChild(button);
  }
  row.appendChild(actions);
  row.addEventListener("click", () => {
    selectedWord = candidate.word;
    render();
  });
  return row;
}

function render() {
  if (!view) {
    sessionLine.textContent = "no session";
    countersEl.textContent = "";
    columns.innerHTML = "";
    unmatchedBanner.hidden = true;
    exportListBtn.disabled = true;
    exportCsvBtn.disabled = true;
    exportPreview.textContent = "";
    helpEl.hidden = true;
    return;
  }
  const paramsText = Object.entries(view.params)
    .map(([k, v]) => `${k}=${String(v)}`).join(" ");
  sessionLine.textContent =
    `session ${view.sessionId.slice(0, 8)} · ${view.method}`
    + (paramsText ? ` · ${paramsText}` : "")
    + ` · seeds: ${view.seeds.join(", ")}`;

  const c = view.counters;
  countersEl.textContent =
    `${c.total} candidates · ${c.accepted} accepted · `
    + `${c.rejected} rejected · ${c.pending} pending`;

  if (view.unmatched.length > 0) {
    unmatchedBanner.textContent =
      `unmatched seeds (not on the resource): ${view.unmatched.join(", ")}`;
    unmatchedBanner.hidden = false;
  } else {
    unmatchedBanner.hidden = true;
  }

  columns.innerHTML = "";
  const groups = groupByStatus(view);
  for (const status of ["pending", "accepted", "rejected"] as Status[]) {
    const column = document.createElement("section");
    column.className = `column ${status}`;
    const heading = document.createElement("h3");
    heading.textContent = `${status} (${groups[status].length})`;
    column.appendChild(heading);
    const list = document.createElement("ul");
    for (const candidate of groups[status]) {
      list.appendChild(renderCandidate(candidate));
    }
    column.appendChild(list);
    columns.appendChild(column);
  }

  const exportable = decidedCount(view) > 0;
  exportListBtn.disabled = !exportable;
  exportCsvBtn.disabled = !exportable;
  const exportSize = exportWordlistText(view).split("\n")
    .filter(Boolean).length;
  exportPreview.textContent = `export: ${exportSize} words`;
  helpEl.hidden = false;
}

async function refreshFromServer(sessionId: string) {
  view = projectSession(await client.session(sessionId));
}

async function runExpand() {
  if (busy) return;
  clearError();
  const seeds = parseSeedText(seedsBox.value);
  if (seeds.length === 0) {
    showError("enter at least one seed word");
    return;
  }
  const method = methodSelect.value;
  if (!method) {
    showError("no expansion method available");
    return;
  }
  const params: Record<string, unknown> = {};
  if (method === "colex") params.lang = langSelect.value;
  if (method.startsWith("embedding")) params.tau = Number(tauInput.value);
  setBusy(true);
  try {
    const response = await client.expand({
      seeds, method, params, sessionId: view?.sessionId,
    });
    await refreshFromServer(response.session_id);
    if (!response.expandable) {
      showError("no seed could be mapped onto the resource; "
                + "the list is not expandable");
    }
    selectedWord = view && view.candidates.length > 0
      ? view.candidates[0]!.word : null;
  } catch (err) {
    // non-destructive: the current view stays on screen
    showError(err instanceof ApiError ? err.message : String(err));
  } finally {
    setBusy(false);
    render();
  }
}

async function decide(word: string, decision: Decision) {
  if (!view) return;
  clearError();
  const sessionId = view.sessionId;
  const before = view;
  view = applyDecision(view, word, decision);
  selectedWord = word;
  render();
  try {
    await client.decide(sessionId, word, decision);
    await refreshFromServer(sessionId);
  } catch (err) {
    view = before;  // revert the optimistic update
    showError(err instanceof ApiError ? err.message : String(err));
  }
  render();
}

function download(filename: string, text: string) {
  const blob = new Blob([text], { type: "text/plain;charset=utf-8" });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}

async function exportFile(kind: "list" | "csv") {
  if (!view) return;
  clearError();
  try {
    // byte-identical to the backend export by construction: the download
    // writes the server's own strings
    const response = await client.export(view.sessionId);
    if (kind === "list") {
      download(`lexicon-${view.sessionId.slice(0, 8)}.txt`,
               response.wordlist);
    } else {
      download(`annotations-${view.sessionId.slice(0, 8)}.csv`,
               response.annotations_csv);
    }
  } catch (err) {
    showError(err instanceof ApiError ? err.message : String(err));
  }
}

function moveSelection(offset: number) {
  if (!view || view.candidates.length === 0) return;
  const words = view.candidates.map((c) => c.word);
  const current = selectedWord ? words.indexOf(selectedWord) : -1;
  const next = current < 0 ? 0
    : Math.min(words.length - 1, Math.max(0, current + offset));
  selectedWord = words[next] ?? null;
  render();
}

function onKey(event: KeyboardEvent) {
  if (event.target instanceof HTMLTextAreaElement
      || event.target instanceof HTMLInputElement) {
    return;
  }
  if (event.key === "j" || event.key === "ArrowDown") {
    event.preventDefault();
    moveSelection(1);
  } else if (event.key === "k" || event.key === "ArrowUp") {
    event.preventDefault();
    moveSelection(-1);
  } else if (event.key === "a" && selectedWord) {
    void decide(selectedWord, "accept");
  } else if ((event.key === "x" || event.key === "r") && selectedWord) {
    void decide(selectedWord, "reject");
  }
}

expandBtn.addEventListener("click", () => void runExpand());
newSessionBtn.addEventListener("click", () => {
  view = null;
  selectedWord = null;
  clearError();
  render();
});
methodSelect.addEventListener("change", onMethodChange);
exportListBtn.addEventListener("click", () => void exportFile("list"));
exportCsvBtn.addEventListener("click", () => void exportFile("csv"));
apiInput.addEventListener("change", () => {
  client = new LexkitClient(apiInput.value.replace(/\/$/, ""));
  view = null;
  void loadMethods().then(render);
});
document.addEventListener("keydown", onKey);

void loadMethods().then(render);
