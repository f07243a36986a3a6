"""Prove every bundled fixture with both backends and print a summary table."""
import time

from gddx import data, workflow
from gddx.errors import GddxError


def main() -> None:
    rows = []
    for name in data.fixture_names():
        construction = workflow.load_construction(data.fixture_text(name))
        goal = workflow.resolve_goal(construction, None, seed=0)
        for backend in ("gdd", "wu"):
            started = time.monotonic()
            try:
                outcome = workflow.run_prove(construction, goal, backend=backend)
                status = outcome.status
            except GddxError as exc:
                status = f"error: {exc}"
            rows.append((name, backend, status, time.monotonic() - started))
    width = max(len(r[0]) for r in rows)
    for name, backend, status, elapsed in rows:
        print(f"{name:<{width}}  {backend:<3}  {elapsed * 1000:7.1f} ms  {status}")


if __name__ == "__main__":
    main()
