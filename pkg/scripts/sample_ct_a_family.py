import argparse
import os
import sys
from typing import List

# Ensure 'gprojlab' is importable when running as a script
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from gprojlab.checks import CheckContext, run_check
from gprojlab.engine.logging import RunLog, configure_logging
from gprojlab.qspec import parse_algebra


def family_document(t: int, linear: int) -> str:
    """t triangles hung on the vertices of a linear A_linear, one per vertex."""
    lines: List[str] = [f"glue CT{t} {{", f"  comp L = nakayama linear n={linear};"]
    for k in range(1, t + 1):
        lines.append(f"  comp T{k} = nakayama cyclic n=3 len=2;")
        lines.append(f"  identify L.{k} = T{k}.1;")
    lines.append(f"  triangles {t};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main() -> None:
    parser = argparse.ArgumentParser(description="Run the ct-a check over a family of triangle gluings")
    parser.add_argument("--max-triangles", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    configure_logging(level="WARNING")

    print("t  objects  blocks  gd  verdict")
    for t in range(1, args.max_triangles + 1):
        parsed = parse_algebra(family_document(t, max(t, 2)))
        ctx = CheckContext(bound=None, seed=args.seed, sample=1, max_dim=1, logger=RunLog())
        verdict = run_check("ct-a", parsed, {}, ctx)
        ev = verdict.evidence
        print(f"{t:<2} {ev.get('objects', '-'):<8} {len(ev.get('blocks', {})):<7} {ev.get('gd')!s:<3} "
              f"{'pass' if verdict.passed else 'undetermined'}")


if __name__ == "__main__":
    main()
