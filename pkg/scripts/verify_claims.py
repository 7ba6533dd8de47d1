"""Run the full verification battery and print the report.

Exit status is 0 when every check passes (findings do not count as
failures) and 1 otherwise.
"""

import argparse
import sys

from quadops.verify import VerifyConfig, report_to_json, report_to_text, verify_all


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--max-weight",
        type=int,
        default=4,
        help="largest arity-side weight expanded by the dimension checks (default 4)",
    )
    parser.add_argument(
        "--scan-radius",
        type=int,
        default=2,
        help="half-width of the coefficient grid for the relation scan (default 2)",
    )
    parser.add_argument(
        "--no-scan",
        action="store_true",
        help="skip the coefficient-grid scan",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        help="emit the report as JSON instead of text",
    )
    parser.add_argument(
        "--report",
        metavar="PATH",
        help="also write the rendered report to PATH",
    )
    ns = parser.parse_args(argv)

    config = VerifyConfig(
        max_weight=ns.max_weight,
        scan_radius=ns.scan_radius,
        run_scan=not ns.no_scan,
    )
    report = verify_all(config=config)
    rendered = report_to_json(report) if ns.json else report_to_text(report)
    print(rendered)
    if ns.report:
        with open(ns.report, "w", encoding="utf-8") as handle:
            handle.write(rendered + "\n")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
