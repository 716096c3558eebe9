"""Rewrite docs/golden/*.json from the current CLI output.

Run only after a deliberate output change; the test suite compares against
these files byte for byte.
"""
import io
import pathlib
import sys

from nscs.cli import main

GOLDEN = pathlib.Path(__file__).resolve().parents[1] / "docs" / "golden"

CASES = {
    "detect": ["--json", "detect", "49", "119", "374"],
    "analyze": ["--json", "analyze", "--pairs", "2:7,2:9", "--verify", "--bound", "1000"],
    "factor": ["--json", "factor", "4", "14", "63", "126", "--i-normal", "2",
               "--chain", "28,1,0", "0,0,2", "--mode", "left"],
    "survey": ["--json", "survey", "--max-gen", "30", "--dim", "3"],
    "verify": ["--json", "verify", "--suite", "all", "--seed", "0", "--count", "3"],
}


def render(argv):
    buf = io.StringIO()
    code = main(argv, stdout=buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    for name, argv in CASES.items():
        code, text = render(argv)
        if code:
            sys.exit(f"{name}: exit {code}")
        (GOLDEN / f"{name}.json").write_text(text, encoding="utf-8")
        print(f"wrote {name}.json")
