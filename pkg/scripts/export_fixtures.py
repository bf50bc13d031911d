"""Write the bundled fixtures as JSON documents under fixtures/."""

import argparse
from pathlib import Path

from valchain import jsonio
from valchain.fixtures import get_fixture


def documents():
    A, B, R = get_fixture("A"), get_fixture("B"), get_fixture("B-REPAIRED")
    yield "fixtureA.w1.json", jsonio.valuation_to(A.maclane.valuation())
    yield "fixtureA.maclane.json", jsonio.chain_to(A.maclane)
    yield "fixtureA.sdc.json", jsonio.chain_to(A.sdc)
    yield "fixtureA.candidates.json", jsonio.candidates_to(A.candidates)
    yield "fixtureB.w2.json", jsonio.valuation_to(B.maclane.valuation())
    yield "fixtureB.maclane.json", jsonio.chain_to(B.maclane)
    yield "fixtureB.sdc.json", jsonio.chain_to(B.sdc)
    yield "fixtureB.candidates.json", jsonio.candidates_to(B.candidates)
    yield "fixtureB-repaired.sdc.json", jsonio.chain_to(R.sdc)
    yield "fixtureB-repaired.candidates.json", jsonio.candidates_to(R.candidates)
    yield "fam-noness.family.json", jsonio.chain_to(get_fixture("FAM-NONESS").family)
    yield "fam-as.family.json", jsonio.chain_to(get_fixture("FAM-AS").family)
    yield "fam-as.mlv.json", jsonio.chain_to(get_fixture("FAM-AS").mlv)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "fixtures"))
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, doc in documents():
        (out / name).write_text(jsonio.dumps(doc))
        print(out / name)


if __name__ == "__main__":
    main()
