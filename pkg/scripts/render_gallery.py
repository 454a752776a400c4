"""SVG pictures of a few transported disc models and their Heegaard diagrams.

    python scripts/render_gallery.py figures/
"""

import sys
from pathlib import Path

from qheegaard.braid_core import parse_braid
from qheegaard.disc_model import realise
from qheegaard.heegaard import build_heegaard_diagram
from qheegaard.intersection_form import omega_q, transported_model
from qheegaard.render import grading_labels, svg_diagram, svg_disc

GALLERY = [("trefoil", "s1^3", 2), ("cinquefoil", "s1^5", 2), ("figure_eight", "s1 s2^-1 s1 s2^-1", 3)]


def main(out: str = "figures"):
    d = Path(out)
    d.mkdir(parents=True, exist_ok=True)
    for name, text, n in GALLERY:
        w = parse_braid(text, n)
        model = transported_model(w)
        real = realise(model)
        (d / f"{name}_disc.svg").write_text(svg_disc(real, title=text, labels=grading_labels(omega_q(w))))
        (d / f"{name}_heegaard.svg").write_text(svg_diagram(build_heegaard_diagram(model, w, real)))
        print(f"{name}: {d / (name + '_disc.svg')}, {d / (name + '_heegaard.svg')}")


if __name__ == "__main__":
    main(*sys.argv[1:])
