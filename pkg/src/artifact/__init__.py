"""Exact twisted Hochschild 2-cycles on quantized coordinate rings.

Typical use::

    from artifact import build_irrep, CoeffMatrix, pairing_report
    rep = build_irrep("A2", [1, 1])
    report = pairing_report(rep, CoeffMatrix.unit(rep.dim, 0, 0))
"""

__version__ = "0.1.0"

from .scalar import ONE, ZERO, RationalScalar, Scalar, parse_scalar, qnum  # noqa: E402
from .cartan import RootSystem, Weight, bilinear, root_system, two_rho, weyl_dim  # noqa: E402
from .repbuild import E, F, K, Kinv, Kw, Gen, Rep, UqElement, build_irrep, fundamental_slN, pi, relation_checks  # noqa: E402
from .coordring import CoordElement, Verdict, act_left, act_right, counit, decide, equal_exact, sigma_twist, u, ustar  # noqa: E402
from .matunits import CoeffMatrix, CoordMatrix, build_P, build_Q, is_flag_supported, is_projection, qtrace, unit_M, unit_N  # noqa: E402
from .flags import LeviSubset, TensorVector, grassmannian_projection, grassmannian_vector, in_flag, levi_invariant  # noqa: E402
from .hochschild import Chain, CocycleSpec, OutOfContract, TwistSpec, boundary, eta_apply, normalize, two_cycle  # noqa: E402
from .pairings import (  # noqa: E402
    IndependenceCertificate,
    PairingReport,
    chi,
    chi_tilde,
    eta_lambda,
    family_certificate,
    independence_certificate,
    pairing_report,
)

__all__ = [
    "ONE", "ZERO", "RationalScalar", "Scalar", "parse_scalar", "qnum",
    "RootSystem", "Weight", "bilinear", "root_system", "two_rho", "weyl_dim",
    "E", "F", "K", "Kinv", "Kw", "Gen", "Rep", "UqElement", "build_irrep", "fundamental_slN", "pi", "relation_checks",
    "CoordElement", "Verdict", "act_left", "act_right", "counit", "decide", "equal_exact", "sigma_twist", "u", "ustar",
    "CoeffMatrix", "CoordMatrix", "build_P", "build_Q", "is_flag_supported", "is_projection", "qtrace", "unit_M", "unit_N",
    "LeviSubset", "TensorVector", "grassmannian_projection", "grassmannian_vector", "in_flag", "levi_invariant",
    "Chain", "CocycleSpec", "OutOfContract", "TwistSpec", "boundary", "eta_apply", "normalize", "two_cycle",
    "IndependenceCertificate", "PairingReport", "chi", "chi_tilde", "eta_lambda", "family_certificate",
    "independence_certificate", "pairing_report",
]
