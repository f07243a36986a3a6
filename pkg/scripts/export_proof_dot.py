"""Write a fixture's proof DAG as a DOT file (pipe through `dot -Tsvg`).

Usage: python scripts/export_proof_dot.py [fixture] [out.dot]
"""
import sys

from gddx import data, workflow


def main() -> None:
    name = sys.argv[1] if len(sys.argv) > 1 else "ninepoint"
    out = sys.argv[2] if len(sys.argv) > 2 else f"{name}.dot"
    construction = workflow.load_construction(data.fixture_text(name))
    goal = workflow.resolve_goal(construction, None, seed=0)
    outcome = workflow.run_prove(construction, goal, mode="dot")
    if outcome.status != "proved":
        sys.exit(f"{name}: {outcome.rendering.strip()}")
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(outcome.rendering)
    print(f"wrote {out} ({len(outcome.dag.nodes)} nodes)")


if __name__ == "__main__":
    main()
