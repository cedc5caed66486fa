/** Pure session-view model.
 *
 * The view is a projection of the backend session snapshot: candidate
 * statuses come from the decision map (latest decision wins, so a word is
 * never accepted and rejected at once), counters are tallies over those
 * statuses, and the export strings mirror the backend's export format
 * byte for byte. Optimistic updates go through applyDecision and are
 * reconciled against the server snapshot on acknowledgement.
 */

import type { Counts, Decision, SessionSnapshot } from "./api.js";

export type Status = "pending" | "accepted" | "rejected";

export interface CandidateView {
  word: string;
  status: Status;
  isSeed: boolean;
}

export interface SessionView {
  sessionId: string;
  method: string;
  params: Record<string, unknown>;
  annotator: string;
  seeds: string[];
  unmatched: string[];
  candidates: CandidateView[];
  counters: Counts;
}

function statusOf(decision: Decision | undefined): Status {
  if (decision === "accept") return "accepted";
  if (decision === "reject") return "rejected";
  return "pending";
}

export function tally(candidates: CandidateView[]): Counts {
  const counters = { total: candidates.length, accepted: 0, rejected: 0,
                     pending: 0 };
  for (const c of candidates) {
    if (c.status === "accepted") counters.accepted += 1;
    else if (c.status === "rejected") counters.rejected += 1;
    else counters.pending += 1;
  }
  return counters;
}

export function projectSession(snapshot: SessionSnapshot): SessionView {
  const seedSet = new Set(snapshot.seeds);
  const candidates = snapshot.candidates.map((word) => ({
    word,
    status: statusOf(snapshot.decisions[word]),
    isSeed: seedSet.has(word),
  }));
  return {
    sessionId: snapshot.session_id,
    method: snapshot.method,
    params: snapshot.params,
    annotator: snapshot.annotator,
    seeds: snapshot.seeds,
    unmatched: snapshot.unmatched,
    candidates,
    counters: tally(candidates),
  };
}

export function applyDecision(view: SessionView, word: string,
                              decision: Decision): SessionView {
  const candidates = view.candidates.map((c) =>
    c.word === word ? { ...c, status: statusOf(decision) } : c);
  return { ...view, candidates, counters: tally(candidates) };
}

export function decidedCount(view: SessionView): number {
  return view.counters.accepted + view.counters.rejected;
}

/** Mirror of the backend word-list export: candidates minus rejected,
 * in candidate order, one word per line, newline-terminated. */
export function exportWordlistText(view: SessionView): string {
  return view.candidates
    .filter((c) => c.status !== "rejected")
    .map((c) => c.word + "\n")
    .join("");
}

/** Mirror of the backend annotation CSV: decided words sorted by word. */
export function exportAnnotationsCsv(view: SessionView): string {
  const lines = ["word,rater,label"];
  const sorted = [...view.candidates].sort((a, b) =>
    a.word < b.word ? -1 : a.word > b.word ? 1 : 0);
  for (const c of sorted) {
    if (c.status === "accepted") {
      lines.push(`${c.word},${view.annotator},relevant`);
    } else if (c.status === "rejected") {
      lines.push(`${c.word},${view.annotator},irrelevant`);
    }
  }
  return lines.join("\n") + "\n";
}

/** Candidates grouped for rendering; the groups partition the list. */
export function groupByStatus(view: SessionView):
    Record<Status, CandidateView[]> {
  const groups: Record<Status, CandidateView[]> = {
    pending: [], accepted: [], rejected: [],
  };
  for (const c of view.candidates) groups[c.status].push(c);
  return groups;
}

/** Split a free-text seed box into candidate seed words. */
export function parseSeedText(text: string): string[] {
  const seen = new Set<string>();
  for (const raw of text.split(/[\s,;]+/)) {
    const word = raw.trim().toLowerCase();
    if (word) seen.add(word);
  }
  return [...seen];
}
