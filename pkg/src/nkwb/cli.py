"""Command-line front end.

    nkwb <command> TARGET [--field F] [--seed N] [--check-level fast|full] [--format text|json]

TARGET is a builtin name (k2, star:3, mat:2, sweedler, taft:3:13,
group:S3, dualgroup:FILE, example0:2) or a JSON file.  Exit codes: 0 all
certified checks pass, 1 a certified failure, 2 usage or parse error,
3 something was inconclusive.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import builtins as B
from ._util import Report
from .coalgebra import Coalgebra, check_coalgebra
from .comodule import (Certificate, Comodule, NotIsomorphic, Undecided, injective_hull, iso_comodules,
                       one_dimensional, projective_cover, regular_comodule, simple_comodules, vertex_comodule)
from .exactfield import parse_field
from .linalg import Matrix

SCHEMA = "nkwb/1"

# Every identity name that can appear in a report, with what it checks.
IDENTITIES = {
    "coalgebra-axioms": "coassociativity and counit",
    "hopf-axioms": "algebra, bialgebra and antipode axioms, bijective antipode",
    "nakayama-left": "N^l(M) = Hom^C(C, M) with its comodule structure",
    "nakayama-right": "N^r(M) = C (x)_{C*} M",
    "nakayama-adjunction": "triangle identities for N^r -| N^l on simples, hulls, covers and C",
    "semiperfect-hull-cover": "N^l(E(S)) = P(S) and N^r(P(S)) = E(S)",
    "classification": "semiperfect / QcF / co-Frobenius / symmetric flags",
    "nakayama-permutation": "soc P(S) = N^l(S) and top E(S) = N^r(S)",
    "frobenius-pairing": "a non-degenerate balanced bilinear form",
    "nakayama-automorphism": "beta(y, x) = beta(nu(x), y) and nu a coalgebra automorphism",
    "cointegral-unique": "the space of left cointegrals is one-dimensional",
    "modular-data": "distinguished grouplike g, modular function alpha and chi",
    "nakayama-equals-g-s2": "nu for lambda(a S(b)) is h -> g S^2(h)",
    "radford-s4": "S^4(h) = g^-1 (alpha -> h <- alpha^-1) g",
    "modular-object": "N^r(1) = k g via kappa",
    "unimodular": "g_C is the unit object",
    "nakayama-vs-double-dual": "N^r(X) = g (x) X^vv = ^vvX (x) g",
    "hull-cover-modular": "E(S) = P(g (x) S^vv) and P(S) = E(g^v (x) ^vvS)",
    "rigidity": "evaluation, coevaluation and double dual",
    "psi-maps": "Psi^l and Psi^r well defined, colinear, invertible",
    "radford-isomorphism": "explicit, Psi-composite and kappa-transported r_X agree",
    "radford-multiplicative": "r_{X (x) Y} = (r_X (x) id)(id (x) r_Y)",
    "yd-cointegral": "k lambda is a YD object for (a, b) = (1, -1), rederiving lambda, g, alpha",
    "hopf-module-theta": "theta: I(H*) (x) H -> H* is a bijective Hopf-module map",
    "yd-s4": "S^4 predicted by the YD structure equals S^4",
    "braided": "R-form axioms, alpha = b * u^-1 * v, transparency, braided Radford formula",
    "semisimple-trace": "trace identity for the Radford isomorphism of a cosemisimple H",
    "spherical": "pivotal diagram against the Radford isomorphism",
}

# Known answers for the builtins: certified negatives are part of the suite.
EXPECTED_CLASSES = {
    "k2": ("yes", "no", "no", "no"),
    "star": ("yes", "no", "no", "no"),
    "example0": ("yes", "no", "no", "no"),
    "mat": ("yes", "yes", "yes", "yes"),
    "group": ("yes", "yes", "yes", "yes"),
    "dualgroup": ("yes", "yes", "yes", "yes"),
    "sweedler": ("yes", "yes", "yes", None),
    "taft": ("yes", "yes", "yes", None),
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    target: str
    field: str | None = None
    seed: int = 0
    fmt: str = "text"
    check_level: str = "fast"
    extra: dict = dc_field(default_factory=dict)


@dataclass
class Item:
    identity: str
    status: str  # pass | fail | negative | inconclusive | info
    detail: str = ""
    witness: str | None = None
    data: object = None

    def to_json(self) -> dict:
        out = {"identity": self.identity, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        if self.data is not None:
            out["data"] = self.data
        return out


class Suite:
    def __init__(self):
        self.items: list[Item] = []

    def add(self, identity: str, status: str, detail: str = "", witness=None, data=None) -> Item:
        if identity not in IDENTITIES:
            raise KeyError(f"unregistered identity {identity!r}")
        it = Item(identity, status, detail, witness, data)
        self.items.append(it)
        return it

    def report(self, identity: str, rep: Report, detail: str = "") -> Item:
        bad = rep.failures()
        if bad:
            w = "; ".join(c.name + (f" ({c.witness})" if c.witness else "") for c in bad)
            return self.add(identity, "fail", detail, w)
        return self.add(identity, "pass", detail)

    def exit_code(self) -> int:
        st = {i.status for i in self.items}
        if "fail" in st:
            return 1
        if "inconclusive" in st:
            return 3
        return 0


def _iso_status(res) -> tuple[str, str | None]:
    if isinstance(res, Certificate):
        return "pass", None
    if isinstance(res, NotIsomorphic):
        return "fail", res.witness
    return "inconclusive", getattr(res, "reason", None) or "undecided"


# ---------------------------------------------------------------------------
# loading


def load_target(cfg: RunConfig):
    F = parse_field(cfg.field) if cfg.field else None
    t = cfg.target
    head = t.split(":", 1)[0]
    path = Path(t)
    if head in ("k2", "star", "mat", "sweedler", "taft", "group", "dualgroup", "example0") and not path.is_file():
        return B.builtin(t, F)
    if not path.is_file():
        raise UsageError(f"{t}: not a builtin name or a readable file")
    obj = _read_json(path)
    if F is not None:
        obj["field"] = F.to_json()
    return _object_from_json(obj)


def _read_json(path: Path):
    text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _object_from_json(obj):
    from .hopf import HopfAlgebra

    try:
        if obj.get("kind") == "hopf" or "antipode" in obj:
            return HopfAlgebra.from_json(obj)
        return Coalgebra.from_json(obj)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise UsageError(f"malformed object: {exc!r}") from exc


def _select_comodule(C, spec: str | None) -> Comodule:
    if spec is None or spec == "regular":
        return regular_comodule(C)
    kind, _, arg = spec.partition(":")
    if kind == "vertex":
        return vertex_comodule(C, arg)
    if kind in ("simple", "hull", "cover"):
        S = simple_comodules(C)[int(arg)]
        if kind == "simple":
            return S
        return injective_hull(S)[0] if kind == "hull" else projective_cover(S)[0]
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"unknown comodule {spec!r}")
    try:
        return Comodule.from_json(_read_json(path), C)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise UsageError(f"{spec}: malformed comodule: {exc!r}") from exc


def _is_hopf(obj) -> bool:
    from .hopf import HopfAlgebra

    return isinstance(obj, HopfAlgebra)


# ---------------------------------------------------------------------------
# suites


def suite_axioms(s: Suite, C) -> bool:
    from .hopf import check_hopf

    if _is_hopf(C):
        rep = check_hopf(C)
        orders = {c.name: c.label() for c in rep.checks if c.name.startswith("order")}
        s.report("hopf-axioms", Report([c for c in rep.checks if not c.name.startswith("order")]),
                 ", ".join(f"{k} = {v}" for k, v in orders.items()))
    else:
        rep = check_coalgebra(C)
        s.report("coalgebra-axioms", rep)
    return rep.ok


def suite_nakayama(s: Suite, C, cfg: RunConfig):
    from .nakayama import adjunction_data, nakayama_left, nakayama_right, simple_data

    data = simple_data(C)
    fam = []
    for d in data:
        fam += [d.simple, d.hull, d.cover]
    if cfg.check_level == "full" or C.n <= 9:
        fam.append(regular_comodule(C))
    bad = [M.name for M in fam if not adjunction_data(M).ok]
    s.add("nakayama-adjunction", "fail" if bad else "pass", f"{len(fam)} comodules", "; ".join(bad) or None)
    worst = "pass"
    notes = []
    for d in data:
        for label, res in ((f"N^l(E({d.simple.name})) ~ P", iso_comodules(nakayama_left(d.hull).module, d.cover, cfg.seed)),
                           (f"N^r(P({d.simple.name})) ~ E", iso_comodules(nakayama_right(d.cover).module, d.hull, cfg.seed))):
            st, w = _iso_status(res)
            if st != "pass":
                notes.append(f"{label}: {w}")
                worst = st if worst != "fail" else worst
    s.add("semiperfect-hull-cover", worst, f"{len(data)} simples", "; ".join(notes) or None)
    dims = {d.simple.name: [nakayama_left(d.simple).module.dim, nakayama_right(d.simple).module.dim] for d in data}
    s.add("nakayama-left", "info", "dim N^l(S), dim N^r(S) per simple", data=dims)


def suite_classify(s: Suite, C, cfg: RunConfig):
    from .nakayama import classify

    rep = classify(C, cfg.seed)
    flags = (rep.semiperfect, rep.qcf, rep.cofrobenius, rep.symmetric)
    labels = tuple(f.label() for f in flags)
    js = rep.to_json()
    head = (C.name or "").split(":", 1)[0]
    expected = EXPECTED_CLASSES.get(head)
    # implications symmetric => co-Frobenius => QcF => semiperfect
    chain_ok = all(not (labels[i + 1] == "yes" and labels[i] != "yes") for i in range(3))
    if "inconclusive" in labels:
        status = "inconclusive"
    elif not chain_ok:
        status = "fail"
    elif expected and any(e is not None and e != l for e, l in zip(expected, labels)):
        status = "fail"
    elif "no" in labels:
        status = "negative"
    else:
        status = "pass"
    s.add("classification", status, " ".join(f"{k}={v}" for k, v in
                                              zip(("semiperfect", "qcf", "cofrobenius", "symmetric"), labels)),
          data=js)
    if rep.permutation is not None:
        s.add("nakayama-permutation", "pass", f"pi = {rep.permutation}")
    return rep


def suite_pairing(s: Suite, C, cfg: RunConfig):
    from .nakayama import (BalancedForm, DegenerateSearchInconclusive, check_nakayama_automorphism,
                           frobenius_pairing, nakayama_automorphism)

    try:
        beta = frobenius_pairing(C, cfg.seed)
    except DegenerateSearchInconclusive as exc:
        s.add("frobenius-pairing", "inconclusive", str(exc))
        return None
    if not isinstance(beta, BalancedForm):
        s.add("frobenius-pairing", "negative", "none exists", beta.witness)
        return None
    s.add("frobenius-pairing", "pass" if beta.is_balanced() else "fail", "non-degenerate balanced form found",
          data=beta.matrix.to_strings())
    nu = nakayama_automorphism(beta)
    checks = check_nakayama_automorphism(nu)
    bad = [k for k, v in checks.items() if not v]
    s.add("nakayama-automorphism", "fail" if bad else "pass", "nu up to coinner automorphisms",
          "; ".join(bad) or None, data=nu.matrix.to_strings())
    return nu


def suite_hopf(s: Suite, H, cfg: RunConfig):
    from . import hopf as hp

    try:
        lam = hp.cointegral(H)
    except hp.DimensionNotOne as exc:
        s.add("cointegral-unique", "fail", str(exc))
        return
    F = H.field
    s.add("cointegral-unique", "pass", "normalized: " + lam.normalization,
          data=[F.fmt(x) for x in lam.values])
    try:
        md = hp.modular_data(H)
    except (hp.NotGrouplike, hp.InconsistentChi) as exc:
        s.add("modular-data", "fail", str(exc))
        return
    s.report("modular-data", md.report, f"g = {_fmt_elem(H, md.g)}")
    s.report("nakayama-equals-g-s2", hp.nakayama_formula_check(H))
    s4 = hp.radford_s4_check(H, md)
    bad = [H.labels[j] for j, r in enumerate(s4.residuals) if any(x != F.zero for x in r)]
    s.add("radford-s4", "pass" if s4.ok else "fail", "S^4 = id" if s4.trivial else "S^4 != id",
          ", ".join(bad) or None)
    mo = hp.modular_object(H)
    s.report("modular-object", mo.report)
    if md.unimodular:
        s.add("unimodular", "pass", "g_C = 1")
    else:
        s.add("unimodular", "negative", "g_C = k_g with g != 1")
    fam = hp.comodule_family(H, include_regular=cfg.check_level == "full" or H.n <= 9)
    s.report("rigidity", _merge(hp.check_rigidity(X, Y) for X, Y in _pairs(fam, cfg)))
    worst, notes = "pass", []
    for X in fam:
        for k, v in hp.naka_vs_dual_certificates(H, X, cfg.seed).items():
            st, w = _iso_status(v)
            if st != "pass":
                worst = st if worst != "fail" else worst
                notes.append(f"{X.name}: {k}")
    s.add("nakayama-vs-double-dual", worst, f"{len(fam)} comodules", "; ".join(notes) or None)
    worst, notes = "pass", []
    for S in simple_comodules(H):
        for k, v in hp.hull_cover_certificates(H, S, cfg.seed).items():
            st, w = _iso_status(v)
            if st != "pass":
                worst = st if worst != "fail" else worst
                notes.append(f"{S.name}: {k}")
    s.add("hull-cover-modular", worst, "", "; ".join(notes) or None)
    small = [X for X in fam if X.dim <= 2]
    s.report("psi-maps", _merge(hp.psi_maps(H, X, Y).report for X, Y in _pairs(small, cfg)))
    s.report("radford-isomorphism", _merge(hp.radford_isomorphism(H, X).report for X in fam),
             f"{len(fam)} comodules")
    bad = [f"{X.name},{Y.name}" for X, Y in _pairs(small, cfg) if not hp.radford_multiplicativity(H, X, Y)]
    s.add("radford-multiplicative", "fail" if bad else "pass", "", "; ".join(bad) or None)
    cy = hp.cointegral_yd(H)
    agree = cy.cointegral == lam.values and cy.g == md.g and cy.alpha == md.alpha
    rep = Report([c for c in cy.report.checks if c.name != "theta is bijective"
                  and c.name != "theta is a Hopf-module map"])
    rep.add("agrees with the cointegral solver", agree)
    s.report("yd-cointegral", rep)
    s.report("hopf-module-theta", Report([c for c in cy.report.checks if c.name.startswith("theta")]))
    pred = hp.yd_s4_prediction(H, cy)
    s.add("yd-s4", "pass" if pred == H.S_power(4) and pred == s4.rhs else "fail")
    if hp.is_cosemisimple(H):
        rep = Report()
        for S in simple_comodules(H):
            for phi in hp.double_dual_isos(S, cfg.seed):
                rep.extend(hp.semisimple_trace_check(H, S, phi), f"{S.name}: ")
        s.report("semisimple-trace", rep)


def _fmt_elem(H, v) -> str:
    F = H.field
    terms = [(F.fmt(c) + "*" if c != F.one else "") + H.labels[i] for i, c in enumerate(v) if c != F.zero]
    return " + ".join(terms) or "0"


def _pairs(fam, cfg: RunConfig):
    pairs = [(X, Y) for X in fam for Y in fam]
    if cfg.check_level == "full":
        return pairs
    return pairs[:: max(1, len(pairs) // 12)]


def _merge(reports) -> Report:
    out = Report()
    for r in reports:
        out.extend(r)
    return out


def suite_braided(s: Suite, H, rform, cfg: RunConfig):
    from . import hopf as hp

    md = hp.modular_data(H)
    fam = [hp.comodule_unit(H).renamed("k_1"), one_dimensional(H, md.g, "k_g")]
    fam += hp.comodule_family(H, include_regular=False)[1:]
    try:
        data = hp.rform_ops(rform, fam)
    except hp.NotRForm as exc:
        s.add("braided", "fail", "not an R-form", str(exc))
        return
    s.report("braided", data.report, rform.name)


def suite_spherical(s: Suite, H, pivot, cfg: RunConfig):
    from . import hopf as hp

    fam = hp.comodule_family(H, include_regular=cfg.check_level == "full")
    try:
        rep = hp.sphericity_check(H, pivot, fam, cfg.seed)
    except hp.NotUnimodular as exc:
        s.add("spherical", "negative", "not unimodular", str(exc))
        return
    except hp.NotPivotal as exc:
        s.add("spherical", "fail", "not pivotal", str(exc))
        return
    s.report("spherical", rep)


# ---------------------------------------------------------------------------
# commands


def run_verify(cfg: RunConfig) -> tuple[int, dict]:
    C = load_target(cfg)
    s = Suite()
    if suite_axioms(s, C):
        suite_classify(s, C, cfg)
        suite_nakayama(s, C, cfg)
        if _is_hopf(C):
            suite_hopf(s, C, cfg)
        else:
            suite_pairing(s, C, cfg)
    return s.exit_code(), _envelope(cfg, C, s)


def _envelope(cfg: RunConfig, C, s: Suite) -> dict:
    out = {
        "schema": SCHEMA,
        "command": cfg.command,
        "target": cfg.target,
        "object": getattr(C, "name", None),
        "field": repr(C.field) if C is not None else None,
        "seed": cfg.seed,
        "check_level": cfg.check_level,
        "items": [i.to_json() for i in s.items],
        "exit": s.exit_code(),
    }
    if cfg.extra:
        out["options"] = {k: v for k, v in sorted(cfg.extra.items()) if v is not None}
    return out


def _run(cfg: RunConfig) -> tuple[int, dict]:
    from . import hopf as hp

    if cfg.command == "verify":
        return run_verify(cfg)
    C = load_target(cfg)
    s = Suite()
    cmd = cfg.command
    if cmd == "validate":
        suite_axioms(s, C)
    elif cmd == "classify":
        suite_classify(s, C, cfg)
    elif cmd == "nakayama":
        from .nakayama import nakayama_left, nakayama_right

        M = _select_comodule(C, cfg.extra.get("comodule"))
        which = cfg.extra.get("functor", "l")
        N = nakayama_left(M).module if which == "l" else nakayama_right(M).module
        ident = "nakayama-left" if which == "l" else "nakayama-right"
        s.add(ident, "info", f"dim = {N.dim}", data={"dim": N.dim, "comodule": N.to_json()})
    elif cmd == "pairing":
        suite_pairing(s, C, cfg)
    elif cmd == "nu":
        if _is_hopf(C):
            s.report("nakayama-equals-g-s2", hp.nakayama_formula_check(C))
        else:
            suite_pairing(s, C, cfg)
    elif cmd in ("cointegral", "modular", "radford", "braided", "spherical"):
        if not _is_hopf(C):
            raise UsageError(f"{cmd} needs a Hopf algebra")
        if cmd == "cointegral":
            lam = hp.cointegral(C)
            s.add("cointegral-unique", "pass", "normalized: " + lam.normalization,
                  data=[C.field.fmt(x) for x in lam.values])
        elif cmd == "modular":
            md = hp.modular_data(C)
            F = C.field
            s.report("modular-data", md.report, f"g = {_fmt_elem(C, md.g)}")
            s.add("unimodular", "pass" if md.unimodular else "negative",
                  data={"g": [F.fmt(x) for x in md.g], "alpha": [F.fmt(x) for x in md.alpha]})
            s.report("modular-object", hp.modular_object(C).report)
        elif cmd == "radford":
            s4 = hp.radford_s4_check(C)
            s.add("radford-s4", "pass" if s4.ok else "fail", "S^4 = id" if s4.trivial else "S^4 != id")
            fam = hp.comodule_family(C, include_regular=cfg.check_level == "full")
            s.report("radford-isomorphism", _merge(hp.radford_isomorphism(C, X).report for X in fam))
        elif cmd == "braided":
            suite_braided(s, C, _load_rform(C, cfg.extra.get("rform")), cfg)
        else:
            suite_spherical(s, C, _load_pivot(C, cfg.extra.get("pivot")), cfg)
    else:
        raise UsageError(f"unknown command {cmd!r}")
    return s.exit_code(), _envelope(cfg, C, s)


def _load_rform(H, spec: str | None):
    from . import hopf as hp

    if spec is None or spec == "trivial":
        return hp.trivial_rform(H)
    if spec.startswith("h4:"):
        return hp.h4_rform(H, spec[3:])
    return hp.RForm.from_json(_read_json(Path(spec)), H)


def _load_pivot(H, spec: str | None):
    from . import hopf as hp

    if spec is None or spec == "counit":
        return hp.Pivot(list(H.counit))
    obj = _read_json(Path(spec))
    vals = obj["functional"] if isinstance(obj, dict) else obj
    return hp.Pivot([H.field.coerce(x) for x in vals])


def format_text(report: dict) -> str:
    lines = [f"{report['command']} {report['target']} [{report['object']} over {report['field']}]"]
    for it in report["items"]:
        line = f"  {it['identity']}: {it['status']}"
        if it.get("detail"):
            line += f" ({it['detail']})"
        if it.get("witness"):
            line += f" -- {it['witness']}"
        lines.append(line)
    lines.append(f"exit {report['exit']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nkwb", description="Nakayama functors and integrals on finite-dimensional coalgebras")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("target")
        sp.add_argument("--field")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--check-level", choices=("fast", "full"), default="fast")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    for name in ("validate", "classify", "pairing", "nu", "cointegral", "modular", "radford", "verify"):
        common(sub.add_parser(name))
    sp = sub.add_parser("nakayama")
    common(sp)
    sp.add_argument("--functor", choices=("l", "r"), default="l")
    sp.add_argument("--comodule")
    sp = sub.add_parser("braided")
    common(sp)
    sp.add_argument("--rform")
    sp = sub.add_parser("spherical")
    common(sp)
    sp.add_argument("--pivot")
    sp = sub.add_parser("builtin")
    sp.add_argument("name")
    sp.add_argument("--field")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "builtin":
            F = parse_field(args.field) if args.field else None
            obj = B.builtin(args.name, F)
            print(json.dumps(obj.to_json(), indent=2, sort_keys=True))
            return 0
        extra = {k: getattr(args, k) for k in ("functor", "comodule", "rform", "pivot") if hasattr(args, k)}
        cfg = RunConfig(args.command, args.target, args.field, args.seed, args.format, args.check_level, extra)
        code, report = _run(cfg)
    except (UsageError, B.UnknownBuiltin, ValueError) as exc:
        msg = f"unknown builtin {exc.args[0]!r}" if isinstance(exc, B.UnknownBuiltin) else str(exc)
        print(f"nkwb: error: {msg}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(format_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
