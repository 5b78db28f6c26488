"""Print the encoding class of common qubit encodings at a few field strengths."""

from molqubit.classifier import classify_encoding

ENCODINGS = [
    ("nuclear spin, N = 0", "0,0,A:0,0,B"),
    ("adjacent rotational, same spin", "0,0:1,0"),
    ("spin-rotational", "0,0,A:1,0,B"),
    ("non-adjacent, dM = 0", "0,0:2,0"),
    ("non-adjacent, dM = 1", "0,0:2,1"),
    ("non-adjacent, dM = 2", "0,0:2,2"),
]
ETAS = (0.0, 0.5, 2.0, 6.0)


def main():
    for kind in ("dipole", "quadrupole"):
        print(f"\n{kind}")
        print(f"{'encoding':34s}" + "".join(f"eta={e:<6g}" for e in ETAS))
        for label, spec in ENCODINGS:
            codes = [classify_encoding(spec, kind, e)[0].code for e in ETAS]
            print(f"{label:34s}" + "".join(f"{c:<10s}" for c in codes))


if __name__ == "__main__":
    main()
