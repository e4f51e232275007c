import { describe, expect, it } from "vitest";

import { ApiError, GameClient } from "../src/api.js";

function fakeFetch(handler: (url: string, init?: RequestInit) => { status: number; body: unknown }) {
  const calls: { url: string; init?: RequestInit }[] = [];
  const impl = async (url: string, init?: RequestInit): Promise<Response> => {
    calls.push({ url, init });
    const { status, body } = handler(url, init);
    return new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });
  };
  return { impl, calls };
}

describe("GameClient", () => {
  it("posts session bodies and parses the reply", async () => {
    const { impl, calls } = fakeFetch(() => ({
      status: 200,
      body: { id: "abc", n: 2, edges: [[0, 1]], p5_free: true, alpha: 1, cop_number: 1, initial_cops: [0, 0] },
    }));
    const client = new GameClient("http://x", impl);
    const info = await client.createSession({ graph6: "A_" });
    expect(info.id).toBe("abc");
    expect(calls[0]!.url).toBe("http://x/api/session");
    expect(JSON.parse(String(calls[0]!.init!.body))).toEqual({ graph6: "A_" });
  });

  it("raises ApiError with the server detail on 400", async () => {
    const { impl } = fakeFetch(() => ({
      status: 400,
      body: { detail: { message: "illegal move", legal_moves: [1, 2, 3] } },
    }));
    const client = new GameClient("", impl);
    await expect(client.robberMove("abc", 0)).rejects.toThrowError(ApiError);
    try {
      await client.robberMove("abc", 0);
    } catch (err) {
      const e = err as ApiError;
      expect(e.status).toBe(400);
      expect((e.detail as { legal_moves: number[] }).legal_moves).toEqual([1, 2, 3]);
    }
  });

  it("routes the remaining endpoints", async () => {
    const { impl, calls } = fakeFetch((url) => ({
      status: 200,
      body: url.endsWith("/hint")
        ? { capture_distance: [1], best_moves: [0], legal_moves: [0] }
        : { id: "abc" },
    }));
    const client = new GameClient("", impl);
    await client.start("abc", 3);
    await client.hint("abc");
    await client.undo("abc");
    expect(calls.map((c) => c.url)).toEqual([
      "/api/session/abc/start",
      "/api/session/abc/hint",
      "/api/session/abc/undo",
    ]);
  });
});
