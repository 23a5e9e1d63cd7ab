"""Acceptance criteria 1-10, one PASS/FAIL line each.

Criteria 1-9 are the library property suite (exact arithmetic, zero
tolerance).  Criterion 10 checks the CLI contracts on the shipped
fixtures.  Run directly with ``python tests/test_acceptance.py`` or
through pytest, which prints the lines in its terminal summary.
"""
import sys
from pathlib import Path

import pytest

from astopo import cli, spec_io, suite

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "astopo" / "fixtures"
DATA = Path(__file__).resolve().parent / "data"

LINES = {}


def criterion_10() -> suite.CheckResult:
    r = suite.CheckResult(10, "CLI round-trip, exit codes, suite all")
    fixtures = sorted(FIXTURES.glob("*.space"))
    r.expect(len(fixtures) >= 10, "fixture count")
    for path in fixtures:
        sp = spec_io.load(path)
        again = spec_io.parse_text(spec_io.dumps(sp.spec), base=path.parent)
        r.expect(again == sp.spec and spec_io.dumps(again) == spec_io.dumps(sp.spec), path.name)
        code = cli.run(["validate", "--spec", str(path)]).exit
        r.expect(code == (0 if sp.report.ok else 1), (path.name, code))
    contracts = [
        (["validate", "--spec", FIXTURES / "e1.space"], 0, None),
        (["closure", "--spec", FIXTURES / "e1.space", "--class", "X0", "--level", "2"], 0, [0, 1]),
        (["real-lub", "--members", "1/3", "--a", "0", "--b", "1", "--iters", "8"], 0,
         {"lub": "43/128", "gap": "1/384"}),
        (["validate", "--spec", FIXTURES / "paper-literal-real.space"], 1, None),
        (["validate", "--spec", DATA / "asymmetric.space"], 2, None),
        (["closure", "--spec", FIXTURES / "e1.space", "--class", "X0", "--level", "x"], 2, None),
    ]
    for argv, code, result in contracts:
        rep = cli.run([str(a) for a in argv])
        r.expect(rep.exit == code and (result is None or rep.as_dict()["result"] == result),
                 (argv[0], rep.exit))
    asym = cli.run(["validate", "--spec", str(DATA / "asymmetric.space")])
    r.expect(asym.witness == (1, 2), asym.witness)
    whole = cli.run(["suite", "all"])
    r.expect(whole.exit == 0 and len(whole.result) == 9, whole.result)
    return r


CHECKS = {**{k: (lambda k=k: suite.CRITERIA[k]()) for k in suite.CRITERIA}, 10: criterion_10}


@pytest.mark.parametrize("k", sorted(CHECKS))
def test_criterion(k):
    res = CHECKS[k]()
    LINES[k] = res.line()
    print(res.line())
    assert res.ok, res.failures[:3]


if __name__ == "__main__":
    results = [CHECKS[k]() for k in sorted(CHECKS)]
    for res in results:
        print(res.line())
    sys.exit(0 if all(r.ok for r in results) else 1)
