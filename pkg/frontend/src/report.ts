/** Accuracy report view: Top/Bottom column groups per method, per classifier. */

import type { Report } from "./types";

export function renderReport(container: HTMLElement, report: Report | null): void {
  container.replaceChildren();
  if (report === null || report.cells.length === 0) {
    const placeholder = document.createElement("p");
    placeholder.className = "placeholder";
    placeholder.textContent = "No evaluation yet - pick classifiers and press Evaluate.";
    container.append(placeholder);
    return;
  }

  const methods = [...new Set(report.cells.map((c) => c.method))];
  const classifiers = [...new Set(report.cells.map((c) => c.classifier))];
  const datasets = [...new Set(report.cells.map((c) => c.dataset))];
  const subsets = ["top", "bottom"].filter((s) => report.cells.some((c) => c.subset === s));

  for (const classifier of classifiers) {
    const heading = document.createElement("h3");
    heading.textContent = classifier;
    container.append(heading);

    const table = document.createElement("table");
    table.className = "report-table";
    const head = table.createTHead().insertRow();
    head.insertCell().textContent = "dataset";
    for (const subset of subsets) {
      for (const method of methods) {
        const th = document.createElement("th");
        th.textContent = `${method} ${subset}`;
        head.append(th);
      }
    }

    const body = table.createTBody();
    for (const dataset of datasets) {
      const row = body.insertRow();
      row.insertCell().textContent = dataset;
      for (const subset of subsets) {
        for (const method of methods) {
          const cell = report.cells.find(
            (c) =>
              c.dataset === dataset &&
              c.method === method &&
              c.classifier === classifier &&
              c.subset === subset,
          );
          const td = row.insertCell();
          if (cell) {
            td.textContent = `${(100 * cell.mean).toFixed(2)}±${(100 * cell.std).toFixed(2)}%`;
            td.dataset.mean = String(cell.mean);
            td.dataset.std = String(cell.std);
            td.title = `features: ${cell.features.join(", ")}`;
          } else {
            td.textContent = "-";
          }
        }
      }
    }

    const avgRow = body.insertRow();
    avgRow.className = "average-row";
    avgRow.insertCell().textContent = "Average";
    for (const subset of subsets) {
      for (const method of methods) {
        const avg = report.averages.find(
          (a) => a.method === method && a.classifier === classifier && a.subset === subset,
        );
        const td = avgRow.insertCell();
        td.textContent = avg ? `${(100 * avg.mean).toFixed(2)}%` : "-";
        if (avg) td.dataset.mean = String(avg.mean);
      }
    }
    container.append(table);
  }
}
