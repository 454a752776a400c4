"""SVG pictures of the disc model and of the Heegaard diagram's disc part."""

from __future__ import annotations

from .disc_model import Realisation, chord_polyline, chords, puncture_layout

COLORS = {"a": "#c0392b", "b": "#1e8449", "Z": "#000000", "W": "#000000", "Q": "#2e5cb8"}


def _frame(real: Realisation):
    xs = [p for p in real.px] + [x for x in real.x]
    lo, hi = min(xs), max(xs)
    height = 0
    for c in chords(real):
        height = max(height, abs(c.v - c.u) // 2)
    pad = 16
    return lo - pad, hi + pad, height + pad


def svg_disc(real: Realisation, title: str = "", tubes=None, basepoints=None, labels=None) -> str:
    """Arcs red, circles green, p-punctures black, q-punctures blue.

    tubes: optional list of (arc, start puncture, end puncture); their feet
    are drawn as pairs of labelled discs.  basepoints: optional {label: puncture}.
    labels: optional {crossing point: text}, drawn as small dots with captions.
    """
    x0, x1, h = _frame(real)
    s = 4
    W, H = (x1 - x0) * s, 2 * h * s + 40

    def X(x):
        return (x - x0) * s

    def Y(y):
        return 20 + (h - y) * s

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
        f'<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="6" y="14" font-size="12" font-family="monospace">{title}</text>')
    out.append(f'<line x1="0" y1="{Y(0)}" x2="{W}" y2="{Y(0)}" stroke="#dddddd" stroke-dasharray="4 4"/>')
    for c in sorted(chords(real), key=lambda c: (c.curve, c.index)):
        pts = " ".join(f"{X(x)},{Y(y)}" for x, y in chord_polyline(c))
        out.append(f'<polyline points="{pts}" fill="none" stroke="{COLORS[c.curve[0]]}" stroke-width="1.5"/>')
    for i, (kind, j) in enumerate(puncture_layout(real.model.n)):
        cx, cy = X(real.px[i]), Y(0)
        fill = "white" if kind == "W" else COLORS[kind]
        out.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="{fill}" stroke="{COLORS[kind]}"/>')
        out.append(f'<text x="{cx - 6}" y="{cy + 16}" font-size="9" font-family="monospace">{kind.lower()}{j}</text>')
    for (x, y), text in sorted((labels or {}).items()):
        out.append(f'<circle cx="{X(x)}" cy="{Y(y)}" r="2" fill="#7d6608"/>')
        out.append(f'<text x="{X(x) + 3}" y="{Y(y) - 3}" font-size="8" fill="#7d6608" font-family="monospace">{text}</text>')
    for arc, p, q in tubes or []:
        for end in (p, q):
            cx, cy = X(real.px[end]), Y(0)
            out.append(f'<circle cx="{cx}" cy="{cy}" r="9" fill="none" stroke="#7d3c98" stroke-width="2"/>')
            out.append(f'<text x="{cx + 8}" y="{cy - 10}" font-size="9" fill="#7d3c98" font-family="monospace">T{arc}</text>')
    for label, p in sorted((basepoints or {}).items()):
        cx, cy = X(real.px[p]), Y(0)
        out.append(f'<text x="{cx - 4}" y="{cy - 8}" font-size="11" font-weight="bold" font-family="monospace">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def grading_labels(res) -> dict:
    """Crossing captions from an Omega computation.

    With one configuration point every generator is a single crossing and gets
    its bigrading; otherwise crossings are numbered along each arc.
    """
    out = {}
    if res.word.n == 2:
        for t, g in zip(res.tuples, res.gradings):
            out[t.crossings[0].point] = f"({g.a_hf},{g.a_qhf})"
        return out
    seen: dict = {}
    for t in res.tuples:
        for c in t.crossings:
            if c.point not in out:
                seen[c.arc] = seen.get(c.arc, 0) + 1
                out[c.point] = f"{c.arc + 1}.{seen[c.arc]}"
    return out


def svg_diagram(diagram) -> str:
    model = diagram.real.model
    tubes = [(t.arc, model.arcs[t.arc].start, model.arcs[t.arc].end) for t in diagram.tubes]
    return svg_disc(
        diagram.real,
        title=f"{diagram.word.text()}  genus {diagram.genus}",
        tubes=tubes,
        basepoints={"w": diagram.basepoint_w, "z": diagram.basepoint_z},
    )
