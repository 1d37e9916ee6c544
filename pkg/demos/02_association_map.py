"""Build the feature association map for the red wine quality data.

Vertices are features; edges connect pairs whose absolute Pearson correlation
meets the similarity threshold (default 0.67). Vertex colors follow the
redundancy grade: green = low (1), yellow = moderate (2), red = high (3).

Run: python demos/02_association_map.py
Renders: demos/winequality_fam.dot (feed to graphviz: dot -Tpng -O <file>)
"""
from pathlib import Path

from famex import build_fam_graph, export_graph, load_csv

DATA = Path(__file__).parent.parent / "data"


def main():
    print("=" * 72)
    print("Feature association map: WineQuality (red)")
    print("=" * 72)

    ds = load_csv(DATA / "winequality_red.csv")
    graph = build_fam_graph(ds)

    print(f"\n{len(graph.vertices)} vertices, {len(graph.edges)} edges "
          f"(thresholds {graph.threshold_low}/{graph.threshold_high})\n")
    for v in graph.vertices:
        partners = [
            f"{graph.vertices[e.target if e.source == v.index else e.source].name}"
            f" ({e.weight:.2f})"
            for e in graph.edges
            if v.index in (e.source, e.target)
        ]
        linked = ", ".join(partners) if partners else "-"
        print(f"  {v.color:<6} grade {v.grade}  {v.name:<22} {linked}")

    greens = sum(1 for v in graph.vertices if v.grade == 1)
    print(f"\n{greens} of {len(graph.vertices)} features are low-redundancy (green).")
    print("fixed.acidity sits in an acidity/density cluster and grades red.")

    out = Path(__file__).parent / "winequality_fam.dot"
    out.write_text(export_graph(graph, "dot"), encoding="utf-8")
    print(f"\nDOT export written to {out}")
    print("JSON export is available via export_graph(graph, 'json').")


if __name__ == "__main__":
    main()
