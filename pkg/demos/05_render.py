"""Write labeled SVG drawings of a few curves to demos/out/."""
from pathlib import Path

from jplus import gallery
from jplus.svg import LAYERS, RenderSpec, render_svg
from jplus.templates import inner_loop_curve, standard_curve

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
shapes = {
    "k3": standard_curve(3),
    "a4": inner_loop_curve(4),
    "single_double_loop": gallery.worked_example(),
    "k2_tangencies": gallery.k2_with_tangencies(),
}
for name, shape in shapes.items():
    path = out / f"{name}.svg"
    path.write_text(render_svg(RenderSpec(shape, frozenset(LAYERS))), encoding="utf-8")
    print("wrote", path)
