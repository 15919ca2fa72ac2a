// Thin DOM layer: applies a BoardViewModel to the page.  No game logic.

import { BoardViewModel, HistoryEntry } from "./view.js";

export function renderBoard(root: HTMLElement, vm: BoardViewModel): void {
  const [n] = vm.dims;
  root.style.setProperty("--cols", String(n));
  root.replaceChildren();
  for (const cell of vm.cells) {
    const el = document.createElement("div");
    el.className = "cell";
    el.dataset.x = String(cell.x);
    el.dataset.y = String(cell.y);
    if (cell.guard) {
      el.classList.add("guard");
      if (cell.role) el.classList.add(cell.role);
    }
    if (cell.attacked) el.classList.add("attacked");
    if (cell.moved) el.classList.add("moved");
    if (cell.vacated) el.classList.add("vacated");
    el.title = `(${cell.x}, ${cell.y})`;
    root.appendChild(el);
  }
}

export function renderBanner(el: HTMLElement, vm: BoardViewModel): void {
  el.textContent = vm.banner.text;
  el.className = `banner ${vm.banner.kind}`;
}

export function renderStatus(el: HTMLElement, vm: BoardViewModel): void {
  el.textContent = `${vm.guardCount} guards · ${vm.phaseLabel}`;
}

export function appendHistory(list: HTMLElement, entry: HistoryEntry): void {
  const li = document.createElement("li");
  li.textContent =
    `#${entry.step} attack (${entry.attack[0]}, ${entry.attack[1]}) — ` +
    `${entry.moves} moved — ${entry.legal ? "legal" : "ILLEGAL"}`;
  if (!entry.legal) li.classList.add("illegal");
  list.prepend(li);
}
