// Page wiring: load a graph into a session, then alternate human robber
// clicks with animated cop replies.  The engine's phase annotations are
// surfaced verbatim, so the board doubles as a walkthrough of the
// capture argument.

import { ApiError, GameClient } from "./api.js";
import { BoardModel } from "./model.js";
import { BoardView } from "./board.js";

const client = new GameClient("");

let model: BoardModel | null = null;
let view: BoardView | null = null;

const el = <T extends HTMLElement>(id: string): T => {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing element #${id}`);
  }
  return found as T;
};

const banner = () => el<HTMLDivElement>("banner");
const log = () => el<HTMLUListElement>("move-log");

function setBanner(text: string, kind: "info" | "warn" | "capture" = "info"): void {
  const b = banner();
  b.textContent = text;
  b.className = `banner ${kind}`;
}

function addLog(text: string): void {
  const li = document.createElement("li");
  li.textContent = text;
  log().appendChild(li);
  log().scrollTop = log().scrollHeight;
}

async function loadGraph(): Promise<void> {
  const text = el<HTMLTextAreaElement>("graph-input").value.trim();
  if (!text) {
    setBanner("paste a graph6 line or an edge list first", "warn");
    return;
  }
  const body = /^\d+\s+\d+/.test(text) ? { edges: text } : { graph6: text };
  try {
    const info = await client.createSession(body);
    model = new BoardModel(info);
    view = new BoardView(el<SVGSVGElement & HTMLElement>("board") as unknown as SVGSVGElement, model, {
      onVertexClick: (v) => void onVertexClick(v),
    });
    log().innerHTML = "";
    el<HTMLDivElement>("props").textContent =
      `n=${info.n}  p5_free=${info.p5_free}  alpha=${info.alpha}  cop_number=${info.cop_number ?? ">2"}`;
    if (info.cop_number !== null && info.cop_number > 2) {
      setBanner(
        `cop number is ${info.cop_number}: the two cops may not win; exploration is still allowed`,
        "warn",
      );
    } else {
      setBanner("pick the robber's starting vertex");
    }
    view.render();
  } catch (err) {
    setBanner(err instanceof ApiError ? `load failed: ${err.message}` : String(err), "warn");
    model = null;
    view = null;
  }
}

async function onVertexClick(v: number): Promise<void> {
  if (!model || !view) {
    return;
  }
  try {
    if (!model.started) {
      const state = await client.start(model.info.id, v);
      model.applyStart(v, state);
      addLog(`robber starts at ${v}; cops at (${state.cops[0]}, ${state.cops[1]}) [${state.phase}]`);
    } else {
      if (!model.isLegalMove(model.state!.robber!, v)) {
        return; // unclickable anyway; belt and braces
      }
      const result = await client.robberMove(model.info.id, v);
      model.applyMove(v, result.state, result.cop_reply);
      const reply = result.cop_reply;
      addLog(
        `robber to ${v}` +
          (reply ? `; cops to (${reply.cops[0]}, ${reply.cops[1]}) [${reply.phase}]` : ""),
      );
      if (result.annotation) {
        addLog(`  ${result.annotation}`);
      }
    }
    if (model.captured) {
      setBanner(`captured at turn ${model.state!.turn}`, "capture");
    } else {
      setBanner(`phase: ${model.phase}; your move`);
    }
    await refreshHint();
    view.render();
  } catch (err) {
    if (err instanceof ApiError && err.status === 400) {
      setBanner(`rejected: ${err.message}`, "warn");
    } else {
      setBanner(String(err), "warn");
    }
  }
}

async function refreshHint(): Promise<void> {
  if (!model || !view || !model.started) {
    return;
  }
  try {
    view.setHint(await client.hint(model.info.id));
  } catch {
    view.setHint(null);
  }
}

async function undo(): Promise<void> {
  if (!model || !view) {
    return;
  }
  try {
    const state = await client.undo(model.info.id);
    model.applyUndo(state);
    addLog("undo");
    setBanner(model.started ? `phase: ${model.phase}; your move` : "pick the robber's starting vertex");
    await refreshHint();
    view.render();
  } catch (err) {
    setBanner(err instanceof ApiError ? `undo: ${err.message}` : String(err), "warn");
  }
}

function exportTranscript(): void {
  if (!model || !model.started) {
    setBanner("nothing to export yet", "warn");
    return;
  }
  const blob = new Blob([JSON.stringify(model.exportTranscript(), null, 2)], {
    type: "application/json",
  });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = "transcript.json";
  a.click();
  URL.revokeObjectURL(a.href);
}

export function wireUp(): void {
  el<HTMLButtonElement>("load-btn").addEventListener("click", () => void loadGraph());
  el<HTMLButtonElement>("hint-btn").addEventListener("click", () => {
    if (view) {
      const on = view.toggleHints();
      void refreshHint();
      setBanner(on ? "hints on: numbers are capture distances; highlighted = escape-maximising" : "hints off");
    }
  });
  el<HTMLButtonElement>("undo-btn").addEventListener("click", () => void undo());
  el<HTMLButtonElement>("export-btn").addEventListener("click", () => exportTranscript());
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  wireUp();
}
