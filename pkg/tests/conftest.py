import sys
from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from spinbundles.exact import ExactMatrix, GaussianRational

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)
gaussians = st.builds(GaussianRational, fractions, fractions)


def matrices(rows, cols):
    return st.lists(gaussians, min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: ExactMatrix(rows, cols, tuple(xs))
    )


def to_sympy(m: ExactMatrix):
    import sympy

    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(z.re.numerator, z.re.denominator)
                                         + sympy.I * sympy.Rational(z.im.numerator, z.im.denominator)
                                         for z in m.entries])


def frac(x) -> Fraction:
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
