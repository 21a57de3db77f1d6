"""Print the maximal groups for every consistent field profile.

Columns: the four profile bits, maximal quasi-split groups, maximal groups,
and the classes that act on no rational surface for that profile.
"""
import argparse

from dp4aut import classify


def rows(pretty=False):
    fmt = (lambda n: n.pretty) if pretty else str
    for p in classify.valid_profiles():
        excl = classify.non_qs_only_classes() if classify.rationality_obstructed(p) else ()
        yield (
            p,
            [fmt(n) for n in classify.sorted_names(classify.maximal_qs(p))],
            [fmt(n) for n in classify.sorted_names(classify.maximal_m(p))],
            [fmt(n) for n in classify.sorted_names(excl)],
        )


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pretty", action="store_true", help="unicode group names")
    args = ap.parse_args(argv)
    print(f"{'i':>3} {'eps3':>4} {'sqrt5':>5} {'s2s':>3}  {'maximal qs':32s} {'maximal':44s} not rational")
    yn = lambda b: "y" if b else "."
    for p, qs, m, ex in rows(args.pretty):
        d = p.as_dict()
        print(
            f"{yn(d['i']):>3} {yn(d['eps3']):>4} {yn(d['sqrt5']):>5} {yn(d['s2s']):>3}  "
            f"{', '.join(qs):32s} {', '.join(m):44s} {', '.join(ex) or '-'}"
        )


if __name__ == "__main__":
    main()
