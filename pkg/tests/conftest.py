"""Shared fixtures.

The expensive objects (duality reports, formula suites) are built once
per session on fixed seeds and reused by the unit tests and the
acceptance tests alike, keeping the whole run inside its time budget.
"""

import pytest

from plucker import (PlaneCurve, PrimeField, Rationals, Sampler,
                     differential_decomposition, duality_report, parse_poly,
                     plucker_suite, translation_pencil_audit)

CONIC = "X^2 + Y^2 - Z^2"
NODAL = "Y^2*Z - X^3 - X^2*Z"
CUSP = "Y^2*Z - X^3"
FERMAT = "X^3 + Y^3 + Z^3"
QUARTIC = "X^4 + Y^4 + Z^4"
CORPUS = (CONIC, NODAL, CUSP, FERMAT, QUARTIC)

SEPTIC_GF5 = "X^7 + X^5*Z^2 - Y*Z^6"
SEXTIC_GF5 = "X*Y^5 + Y*Z^5 + Z*X^5"


def curve_over_q(text):
    return PlaneCurve(parse_poly(text, Rationals()))


@pytest.fixture(scope="session")
def rat():
    return Rationals()


@pytest.fixture(scope="session")
def conic():
    return curve_over_q(CONIC)


@pytest.fixture(scope="session")
def nodal():
    return curve_over_q(NODAL)


@pytest.fixture(scope="session")
def cusp():
    return curve_over_q(CUSP)


@pytest.fixture(scope="session")
def fermat():
    return curve_over_q(FERMAT)


@pytest.fixture(scope="session")
def quartic():
    return curve_over_q(QUARTIC)


@pytest.fixture(scope="session")
def corpus_curves(conic, nodal, cusp, fermat, quartic):
    return {CONIC: conic, NODAL: nodal, CUSP: cusp, FERMAT: fermat,
            QUARTIC: quartic}


@pytest.fixture(scope="session")
def septic_gf5():
    return PlaneCurve(parse_poly(SEPTIC_GF5, PrimeField(5)))


@pytest.fixture(scope="session")
def sextic_gf5():
    return PlaneCurve(parse_poly(SEXTIC_GF5, PrimeField(5)))


@pytest.fixture(scope="session")
def suites(conic, nodal, cusp, fermat):
    return {
        CONIC: plucker_suite(conic, sampler=Sampler()),
        NODAL: plucker_suite(nodal, sampler=Sampler()),
        CUSP: plucker_suite(cusp, sampler=Sampler()),
        FERMAT: plucker_suite(fermat, sampler=Sampler()),
    }


@pytest.fixture(scope="session")
def dreports(conic, nodal, cusp, fermat):
    """Full duality reports, bidual check included, for the four
    budget-sized curves."""
    return {
        CONIC: duality_report(conic, sampler=Sampler()),
        NODAL: duality_report(nodal, sampler=Sampler()),
        CUSP: duality_report(cusp, sampler=Sampler()),
        FERMAT: duality_report(fermat, sampler=Sampler()),
    }


@pytest.fixture(scope="session")
def decomps(nodal, conic):
    return {
        NODAL: differential_decomposition(nodal, sampler=Sampler()),
        CONIC: differential_decomposition(conic, sampler=Sampler()),
    }


@pytest.fixture(scope="session")
def audits(nodal, conic, fermat):
    return {
        NODAL: translation_pencil_audit(nodal, sampler=Sampler()),
        CONIC: translation_pencil_audit(conic, sampler=Sampler()),
        FERMAT: translation_pencil_audit(fermat, sampler=Sampler()),
    }


@pytest.fixture()
def run_cli(capsys):
    from plucker import cli

    def run(argv):
        code = cli.main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
