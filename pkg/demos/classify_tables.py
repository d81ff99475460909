"""Walk the bundled tables and print what each one is.

Every file in demos/data holds one multiplication table. The classifier
answers the membership questions for each, from the bare left invertive
law up to complete inversion.
"""

import pathlib

from aggroupoids import classify, parse_mag

DATA = pathlib.Path(__file__).parent / "data"


def main():
    for path in sorted(DATA.glob("*.mag")):
        g = parse_mag(path.read_text())
        report = classify(g)
        positives = [name for name, flag in report.items() if flag]
        print(f"{path.stem} (order {g.order})")
        for name in positives:
            print(f"  {name}")
        print()


if __name__ == "__main__":
    main()
