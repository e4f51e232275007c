// Small deterministic force-directed layout: seeded initial ring, spring
// forces on edges, inverse-square repulsion between all pairs, centering
// pull.  Deterministic so board snapshots and tests are stable.

export interface Point {
  x: number;
  y: number;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function forceLayout(
  n: number,
  edges: [number, number][],
  width: number,
  height: number,
  iterations = 300,
  seed = 7,
): Point[] {
  const rand = mulberry32(seed);
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) * 0.35;
  const pts: Point[] = Array.from({ length: n }, (_, i) => ({
    x: cx + radius * Math.cos((2 * Math.PI * i) / Math.max(n, 1)) + rand() * 8,
    y: cy + radius * Math.sin((2 * Math.PI * i) / Math.max(n, 1)) + rand() * 8,
  }));
  if (n <= 1) {
    return n === 1 ? [{ x: cx, y: cy }] : [];
  }
  const ideal = radius * 1.2 / Math.sqrt(n);
  for (let it = 0; it < iterations; it++) {
    const cool = 1 - it / iterations;
    const fx = new Array<number>(n).fill(0);
    const fy = new Array<number>(n).fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pts[i]!.x - pts[j]!.x;
        const dy = pts[i]!.y - pts[j]!.y;
        const d2 = Math.max(dx * dx + dy * dy, 1e-4);
        const rep = (ideal * ideal) / d2;
        const d = Math.sqrt(d2);
        fx[i]! += (dx / d) * rep * 18;
        fy[i]! += (dy / d) * rep * 18;
        fx[j]! -= (dx / d) * rep * 18;
        fy[j]! -= (dy / d) * rep * 18;
      }
    }
    for (const [u, v] of edges) {
      const dx = pts[u]!.x - pts[v]!.x;
      const dy = pts[u]!.y - pts[v]!.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1e-2);
      const pull = (d - ideal * 2.2) * 0.08;
      fx[u]! -= (dx / d) * pull;
      fy[u]! -= (dy / d) * pull;
      fx[v]! += (dx / d) * pull;
      fy[v]! += (dy / d) * pull;
    }
    for (let i = 0; i < n; i++) {
      fx[i]! += (cx - pts[i]!.x) * 0.01;
      fy[i]! += (cy - pts[i]!.y) * 0.01;
      const step = Math.min(Math.hypot(fx[i]!, fy[i]!), 14 * cool + 1);
      const norm = Math.max(Math.hypot(fx[i]!, fy[i]!), 1e-9);
      pts[i]!.x += (fx[i]! / norm) * step;
      pts[i]!.y += (fy[i]! / norm) * step;
      const margin = 24;
      pts[i]!.x = Math.min(Math.max(pts[i]!.x, margin), width - margin);
      pts[i]!.y = Math.min(Math.max(pts[i]!.y, margin), height - margin);
    }
  }
  return pts;
}
