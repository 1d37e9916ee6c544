/** Sortable score table. Every number shown is the payload value, verbatim. */

import type { ScoreRecord } from "./types";

export interface SortState {
  column: keyof ScoreRecord;
  descending: boolean;
}

export const DEFAULT_SORT: SortState = { column: "importance_score", descending: true };

const COLUMNS: { key: keyof ScoreRecord; label: string }[] = [
  { key: "rank", label: "rank" },
  { key: "name", label: "feature" },
  { key: "grade", label: "grade" },
  { key: "similarity_score", label: "similarity" },
  { key: "relevance", label: "MI (bits)" },
  { key: "relevance_score", label: "relevance" },
  { key: "importance_score", label: "importance" },
];

export function sortRecords(records: ScoreRecord[], sort: SortState): ScoreRecord[] {
  const sorted = [...records].sort((a, b) => {
    const va = a[sort.column];
    const vb = b[sort.column];
    const cmp = typeof va === "string" ? va.localeCompare(vb as string) : (va as number) - (vb as number);
    return sort.descending ? -cmp : cmp;
  });
  return sorted;
}

export function renderScoreTable(
  container: HTMLElement,
  records: ScoreRecord[],
  highlighted: Set<string>,
  sort: SortState,
  onSort: (column: keyof ScoreRecord) => void,
): void {
  container.replaceChildren();
  const table = document.createElement("table");
  table.className = "score-table";

  const head = table.createTHead().insertRow();
  for (const col of COLUMNS) {
    const th = document.createElement("th");
    th.textContent =
      col.key === sort.column ? `${col.label} ${sort.descending ? "↓" : "↑"}` : col.label;
    th.dataset.column = col.key;
    th.addEventListener("click", () => onSort(col.key));
    head.append(th);
  }

  const body = table.createTBody();
  for (const record of sortRecords(records, sort)) {
    const row = body.insertRow();
    row.dataset.name = record.name;
    if (highlighted.has(record.name)) row.classList.add("highlighted");
    for (const col of COLUMNS) {
      row.insertCell().textContent = String(record[col.key]);
    }
  }
  container.append(table);
}
