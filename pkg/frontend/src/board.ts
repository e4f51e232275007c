// SVG board renderer: vertices, edges, cop/robber markers, hint overlay
// and the phase banner.  Rendering is a pure function of the model plus
// the latest hint payload; all interaction goes through the callback.

import type { Hint } from "./api.js";
import type { BoardModel } from "./model.js";
import { forceLayout, type Point } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface BoardCallbacks {
  onVertexClick: (v: number) => void;
}

export class BoardView {
  private layout: Point[] = [];
  private hint: Hint | null = null;
  private showHints = false;

  constructor(
    private svg: SVGSVGElement,
    private model: BoardModel,
    private callbacks: BoardCallbacks,
  ) {
    const w = Number(svg.getAttribute("width") ?? 720);
    const h = Number(svg.getAttribute("height") ?? 520);
    this.layout = forceLayout(model.n, model.edges, w, h);
  }

  setHint(hint: Hint | null): void {
    this.hint = hint;
    this.render();
  }

  toggleHints(): boolean {
    this.showHints = !this.showHints;
    this.render();
    return this.showHints;
  }

  render(): void {
    const svg = this.svg;
    while (svg.firstChild) {
      svg.removeChild(svg.firstChild);
    }
    const model = this.model;
    const legal = new Set(model.legalTargets());
    for (const [u, v] of model.edges) {
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(this.layout[u]!.x));
      line.setAttribute("y1", String(this.layout[u]!.y));
      line.setAttribute("x2", String(this.layout[v]!.x));
      line.setAttribute("y2", String(this.layout[v]!.y));
      line.setAttribute("class", "edge");
      svg.appendChild(line);
    }
    const cops = model.state?.cops ?? model.info.initial_cops;
    const robber = model.state?.robber ?? null;
    const best = new Set(this.showHints && this.hint ? this.hint.best_moves : []);
    for (let v = 0; v < model.n; v++) {
      const g = document.createElementNS(SVG_NS, "g");
      const c = document.createElementNS(SVG_NS, "circle");
      c.setAttribute("cx", String(this.layout[v]!.x));
      c.setAttribute("cy", String(this.layout[v]!.y));
      c.setAttribute("r", "16");
      const classes = ["vertex"];
      if (legal.has(v)) {
        classes.push("clickable");
      }
      if (best.has(v)) {
        classes.push("hint-best");
      }
      c.setAttribute("class", classes.join(" "));
      c.setAttribute("data-vertex", String(v));
      if (legal.has(v)) {
        c.addEventListener("click", () => this.callbacks.onVertexClick(v));
      }
      g.appendChild(c);
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(this.layout[v]!.x));
      label.setAttribute("y", String(this.layout[v]!.y + 4));
      label.setAttribute("class", "vertex-label");
      label.textContent = String(v);
      g.appendChild(label);
      if (this.showHints && this.hint) {
        const d = this.hint.capture_distance[v];
        const t = document.createElementNS(SVG_NS, "text");
        t.setAttribute("x", String(this.layout[v]!.x + 18));
        t.setAttribute("y", String(this.layout[v]!.y - 12));
        t.setAttribute("class", "hint-label");
        t.textContent = d === null ? "∞" : String(d);
        g.appendChild(t);
      }
      svg.appendChild(g);
    }
    const marker = (v: number, cls: string, r: number) => {
      const m = document.createElementNS(SVG_NS, "circle");
      m.setAttribute("cx", String(this.layout[v]!.x));
      m.setAttribute("cy", String(this.layout[v]!.y));
      m.setAttribute("r", String(r));
      m.setAttribute("class", cls);
      m.setAttribute("pointer-events", "none");
      svg.appendChild(m);
    };
    marker(cops[0], "cop-marker", 9);
    marker(cops[1], "cop-marker", 9);
    if (robber !== null) {
      marker(robber, "robber-marker", 6);
    }
  }
}
