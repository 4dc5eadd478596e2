"""Write the two canonical reconciliation reports and print their summaries.

    python scripts/run_reconcile.py [--outdir reports]
"""

import argparse
from pathlib import Path

from d2cs import reconcile


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="reports")
    ap.add_argument("--limit", type=int)
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, preset in reconcile.PRESETS.items():
        report = reconcile.run(reconcile.ReconcileConfig(preset(), args.limit))
        path = outdir / f"{name}.json"
        path.write_text(reconcile.dumps(report))
        print(f"== {name} -> {path}")
        for fam, counts in report["summary"].items():
            print(f"  {fam:18s} " + "  ".join(f"{k}={v}" for k, v in counts.items()))
        for e in report["entries"]:
            if e["verdict"] == "MISMATCH" and e["kind"] == "count":
                print(f"    {e['family']}{tuple(e['params'])}: formula {e['formula_value']} "
                      f"oracle {e['oracle_value']} {e['notes']}")


if __name__ == "__main__":
    main()
