"""Regenerates the curve fixtures in data/."""
import math
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data"


def write(name, pts, note):
    with open(OUT / name, "w") as f:
        f.write(f"# {note}\n")
        for x, y in pts:
            f.write(f"{x:.17g} {y:.17g}\n")


def ring(n, f):
    return [f(2 * math.pi * k / n) for k in range(n)]


def main():
    OUT.mkdir(exist_ok=True)
    write("circle.txt", ring(512, lambda a: (math.cos(a), math.sin(a))), "unit circle, 512 vertices")
    write("circle_r2.txt", ring(512, lambda a: (2 * math.cos(a), 2 * math.sin(a))), "circle of radius 2")
    write("circle_left.txt", ring(512, lambda a: (-2.5 + math.cos(a), math.sin(a))), "unit circle at -2.5")
    write("circle_right.txt", ring(512, lambda a: (2.5 + math.cos(a), math.sin(a))), "unit circle at +2.5")
    write("ellipse.txt", ring(512, lambda a: (1.5 * math.cos(a), 0.5 * math.sin(a))), "ellipse, semi-axes 1.5 and 0.5")
    corners = [(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)]
    square = []
    for s in range(4):
        (x0, y0), (x1, y1) = corners[s], corners[s + 1]
        square += [(x0 + (x1 - x0) * k / 16, y0 + (y1 - y0) * k / 16) for k in range(16)]
    write("square.txt", square, "unit square, 64 vertices")
    write("blob.txt",
          ring(512, lambda a: ((1 + 0.25 * math.cos(3 * a) + 0.1 * math.sin(5 * a)) * math.cos(a),
                               (1 + 0.25 * math.cos(3 * a) + 0.1 * math.sin(5 * a)) * math.sin(a))),
          "smooth three-lobed blob")
    write("figure_eight.txt", ring(256, lambda a: (math.sin(a), math.sin(a) * math.cos(a))),
          "lemniscate, self-intersecting")


if __name__ == "__main__":
    main()
