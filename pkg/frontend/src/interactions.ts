/** Hover highlighting, click menus, cross-matrix linking, zoom/pan.
 *
 * Highlighting works across every rendered matrix in a container: a
 * hovered keyword lights up in each matrix where it is present, and a
 * hovered cell turns itself and its two keyword labels red. Each
 * matrix carries its own independent zoom/pan transform.
 */

import type { Breadcrumb } from "./types.js";

export const HIGHLIGHT_CLASS = "kre-highlight";
export const RED_HIGHLIGHT_CLASS = "kre-highlight-red";

/**
 * Highlight a keyword in every matrix where it is present. Returns the
 * number of matrices that contain it (the highlight count).
 */
export function highlightKeyword(container: Element, keyword: string): number {
  const matrices = new Set<Element>();
  for (const el of container.querySelectorAll(`[data-keyword]`)) {
    if (el.getAttribute("data-keyword") !== keyword) continue;
    el.classList.add(HIGHLIGHT_CLASS);
    const matrix = el.closest(".kre-matrix");
    if (matrix) matrices.add(matrix);
  }
  return matrices.size;
}

export interface CellHighlightOptions {
  /** Also recolor every cell sharing a row or column with the hovered
   * cell (an improvement suggested by users of the label-only default;
   * off by default for fidelity with the original design). */
  fullRowColumn?: boolean;
}

/**
 * Red-highlight a cell and its two keyword labels, in every matrix
 * where that cell is present. Returns the number of matrices affected.
 */
export function highlightCell(
  container: Element,
  a: string,
  b: string,
  options: CellHighlightOptions = {},
): number {
  const matrices = new Set<Element>();
  for (const el of container.querySelectorAll(".kre-cell")) {
    const ca = el.getAttribute("data-a");
    const cb = el.getAttribute("data-b");
    const match = (ca === a && cb === b) || (ca === b && cb === a);
    if (!match) continue;
    el.classList.add(RED_HIGHLIGHT_CLASS);
    const matrix = el.closest(".kre-matrix");
    if (!matrix) continue;
    matrices.add(matrix);
    for (const label of matrix.querySelectorAll(".kre-label")) {
      const kw = label.getAttribute("data-keyword");
      if (kw === a || kw === b) label.classList.add(RED_HIGHLIGHT_CLASS);
    }
  }
  if (options.fullRowColumn) {
    for (const matrix of matrices) {
      for (const el of matrix.querySelectorAll(".kre-cell")) {
        const ca = el.getAttribute("data-a");
        const cb = el.getAttribute("data-b");
        if (ca === a || cb === a || ca === b || cb === b) {
          el.classList.add(RED_HIGHLIGHT_CLASS);
        }
      }
    }
  }
  return matrices.size;
}

export function clearHighlights(container: Element): void {
  for (const el of container.querySelectorAll(`.${HIGHLIGHT_CLASS}, .${RED_HIGHLIGHT_CLASS}`)) {
    el.classList.remove(HIGHLIGHT_CLASS, RED_HIGHLIGHT_CLASS);
  }
}

export interface NavigationHandlers {
  onNavigate(crumb: Breadcrumb): void;
}

/**
 * Pop up the click menu (its single option is Navigate, matching the
 * on-demand navigation model). Returns the menu element.
 */
export function openNavigationMenu(
  container: Element,
  crumb: Breadcrumb,
  position: { x: number; y: number },
  handlers: NavigationHandlers,
): HTMLElement {
  closeNavigationMenu(container);
  const menu = document.createElement("div");
  menu.className = "kre-menu";
  menu.style.left = `${position.x}px`;
  menu.style.top = `${position.y}px`;
  const item = document.createElement("button");
  item.className = "kre-menu-item";
  item.textContent =
    crumb.kind === "node" ? `Navigate: ${crumb.keyword}` : `Navigate: ${crumb.a} × ${crumb.b}`;
  item.addEventListener("click", () => {
    closeNavigationMenu(container);
    handlers.onNavigate(crumb);
  });
  menu.appendChild(item);
  container.appendChild(menu);
  return menu;
}

export function closeNavigationMenu(container: Element): void {
  for (const el of container.querySelectorAll(".kre-menu")) el.remove();
}

export interface ZoomState {
  scale: number;
  x: number;
  y: number;
}

/** Apply a zoom/pan transform to one matrix's content group. */
export function applyZoom(svg: SVGSVGElement, zoom: ZoomState): void {
  const group = svg.querySelector(".kre-zoom-group");
  if (group) {
    group.setAttribute("transform", `translate(${zoom.x}, ${zoom.y}) scale(${zoom.scale})`);
  }
}

/**
 * Wire independent wheel-zoom and drag-pan onto one matrix svg.
 * Returns the live zoom state (mutated in place).
 */
export function attachZoomPan(svg: SVGSVGElement): ZoomState {
  const zoom: ZoomState = { scale: 1, x: 0, y: 0 };
  svg.addEventListener("wheel", (event) => {
    event.preventDefault();
    const factor = event.deltaY < 0 ? 1.15 : 1 / 1.15;
    zoom.scale = Math.max(0.2, Math.min(8, zoom.scale * factor));
    applyZoom(svg, zoom);
  });
  let dragging: { startX: number; startY: number; baseX: number; baseY: number } | null = null;
  svg.addEventListener("pointerdown", (event) => {
    dragging = { startX: event.clientX, startY: event.clientY, baseX: zoom.x, baseY: zoom.y };
    svg.setPointerCapture(event.pointerId);
  });
  svg.addEventListener("pointermove", (event) => {
    if (!dragging) return;
    zoom.x = dragging.baseX + (event.clientX - dragging.startX);
    zoom.y = dragging.baseY + (event.clientY - dragging.startY);
    applyZoom(svg, zoom);
  });
  svg.addEventListener("pointerup", () => {
    dragging = null;
  });
  return zoom;
}

export interface TooltipController {
  show(text: string, x: number, y: number): void;
  hide(): void;
  element: HTMLElement;
}

export function createTooltip(container: Element): TooltipController {
  const element = document.createElement("div");
  element.className = "kre-tooltip";
  element.style.display = "none";
  container.appendChild(element);
  return {
    element,
    show(text, x, y) {
      element.textContent = text;
      element.style.display = "block";
      element.style.left = `${x + 12}px`;
      element.style.top = `${y + 12}px`;
    },
    hide() {
      element.style.display = "none";
    },
  };
}
