"""Print the exact incidence distribution for a few marginal choices.

The same n and k can put the incidence statistic in very different
regimes depending on how common the features are.  This script tabulates
the PMF and upper tail exactly and sketches each shape with a crude
text bar chart, which is enough to see the support shift and tighten.
"""

from cooccur import Marginals, pmf, support_bounds, tail_cdf_closed_form


def show(marginals: Marginals) -> None:
    lo, hi = support_bounds(marginals)
    print(f"n={marginals.n}, v={marginals.v}  support {lo}..{hi}")
    print(f"{'i':>4}  {'pmf':>10}  {'P(I>=i)':>10}")
    for i in range(lo, hi + 1):
        mass = pmf(marginals, i)
        tail = tail_cdf_closed_form(marginals, i) if i >= 1 else None
        tail_text = tail.decimal(3) if tail else "1.000e0"
        bar = "#" * round(40 * float(mass.value))
        print(f"{i:>4}  {mass.decimal(3):>10}  {tail_text:>10}  {bar}")
    print()


def main() -> None:
    # sparse features: mass piles up at zero
    show(Marginals(20, (4, 5, 6)))
    # balanced features: a proper hump
    show(Marginals(20, (10, 10, 10)))
    # near-saturated features: the lower support bound lifts off zero
    show(Marginals(20, (18, 17, 19)))
    # two features only: this row is hypergeometric
    show(Marginals(20, (8, 12)))


if __name__ == "__main__":
    main()
