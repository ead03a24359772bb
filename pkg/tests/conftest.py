from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from qinduce import induce
from qinduce.ncpoly import NcPoly
from qinduce.presentation import parse_bundle
from qinduce.scalar import Alphabet, GaussianRational, ParamPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

OMEGA4 = Alphabet.galilei("omega", 4)
RHO4 = Alphabet.galilei("rho", 4)


def bundle(tag, truncate=4):
    return parse_bundle(induce.shipped_bundle_text(tag), truncate)


@pytest.fixture(scope="session")
def std():
    return bundle("standard")


@pytest.fixture(scope="session")
def nonstd():
    return bundle("nonstandard")


@pytest.fixture(scope="session")
def U_omega(std):
    return std.algebras["U_omega"]


@pytest.fixture(scope="session")
def F_omega(std):
    return std.algebras["F_omega"]


@pytest.fixture(scope="session")
def U_rho(nonstd):
    return nonstd.algebras["U_rho"]


@pytest.fixture(scope="session")
def F_rho(nonstd):
    return nonstd.algebras["F_rho"]


small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
gaussians = st.builds(GaussianRational, small_fracs, small_fracs)


def param_polys(alphabet=OMEGA4, max_terms=4, max_exp=5):
    exps = st.tuples(*[st.integers(0, max_exp) for _ in alphabet.names])
    return st.dictionaries(exps, gaussians, max_size=max_terms).map(
        lambda d: ParamPoly.from_terms(alphabet, d)
    )


def words(gens, max_len=4):
    return st.lists(st.sampled_from(gens), max_size=max_len).map(tuple)


def nc_polys(alphabet, gens, max_terms=3, max_len=3):
    term = st.tuples(words(gens, max_len), param_polys(alphabet, max_terms=2, max_exp=2))
    return st.lists(term, max_size=max_terms).map(lambda ts: NcPoly.from_pairs(alphabet, ts))


def frac(p, q=1):
    return Fraction(p, q)
