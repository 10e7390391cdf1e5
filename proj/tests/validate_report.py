"""Validate ftcalc JSON output against the published schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    ftcalc, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    report_schema = json.loads((schema_dir / "report.schema.json").read_text())
    poly_schema = json.loads((schema_dir / "polynomial.schema.json").read_text())

    with tempfile.TemporaryDirectory() as tmp:
        out = pathlib.Path(tmp) / "report.json"
        proc = subprocess.run([ftcalc, "verify", "--filter", "table3_*", "--json", str(out)],
                              capture_output=True, text=True)
        report = json.loads(out.read_text())
        jsonschema.validate(report, report_schema)
        failed = any(r["status"] != "pass" for r in report)
        if (proc.returncode != 0) != failed:
            print(f"exit code {proc.returncode} disagrees with report contents", file=sys.stderr)
            return 1

    for args in (["special", "--family", "z", "--n", "4"],
                 ["convert", "--to", "rising", '{"basis":"monomial","coeffs":["1","2/3"]}']):
        proc = subprocess.run([ftcalc, *args], capture_output=True, text=True, check=True)
        jsonschema.validate(json.loads(proc.stdout), poly_schema)
    print(f"validated {len(report)} report entries and 2 polynomial outputs")
    return 0


if __name__ == "__main__":
    sys.exit(main())
