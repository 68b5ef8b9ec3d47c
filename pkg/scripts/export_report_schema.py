"""Write the JSON schema of the mfsr report models to docs/report.schema.json.

Usage:
    python scripts/export_report_schema.py
    python scripts/export_report_schema.py --output /tmp/report.schema.json
    python scripts/export_report_schema.py --check    # exit 1 if the shipped file is stale
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from mfsr.reports import Report

REPO_ROOT = Path(__file__).resolve().parents[1]
DEFAULT_OUTPUT = REPO_ROOT / "docs" / "report.schema.json"


def schema_text() -> str:
    """The schema serialized the way it is shipped (sorted keys, two-space indent)."""
    return json.dumps(Report.model_json_schema(), indent=2, sort_keys=True) + "\n"


def main() -> int:
    parser = argparse.ArgumentParser(description="Export the report JSON schema.")
    parser.add_argument(
        "--output",
        type=Path,
        default=DEFAULT_OUTPUT,
        help=f"Destination file (default: {DEFAULT_OUTPUT.relative_to(REPO_ROOT)}).",
    )
    parser.add_argument(
        "--check",
        action="store_true",
        help="Compare instead of writing; exit 1 when the file differs from the models.",
    )
    args = parser.parse_args()
    text = schema_text()
    if args.check:
        try:
            current = json.loads(args.output.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            print(f"Cannot read {args.output}: {e}", file=sys.stderr)
            return 1
        if current != json.loads(text):
            print(f"{args.output} is stale; rerun without --check.", file=sys.stderr)
            return 1
        print(f"{args.output} is up to date.")
        return 0
    args.output.parent.mkdir(parents=True, exist_ok=True)
    args.output.write_text(text, encoding="utf-8")
    print(f"Wrote {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
