"""Command line verification harness.

    heckeduality solomon --type B --rank 2
    heckeduality kato --type A --rank 1 --lattice weight --q 4 --bound 6
    heckeduality complex --type A --rank 3 --I0 1,3

Exit status: 0 if every check passes, 1 if some check fails (including a
violated hypothesis), 2 for bad input.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import errors
from .affine_weyl import AffineWeylGroup
from .coxeter_complex import complex_check
from .dualities import (build_ramification, chi_intertwiner_check, hl_analogue_check, hl_character_check,
                        involution_check, kato_check, solomon_check)
from .hecke import AffineHeckeAlgebra, HeckeAlgebra
from .hecke_modules import (affine_one_dimensional_modules, coxeter_order, ind, one_dimensional_modules,
                            principal_series, res, two_dimensional_modules)
from .report import CheckRecord, VerificationReport
from .root_datum import RootDatum, build_root_datum, load_datum, parameter_values
from .weyl import WeylGroup, irreducible_characters

SUITES = ("solomon", "hl-char", "kato-finite", "kato-affine", "intertwiner", "involution",
          "hl-analogue", "complex")

# generic points for the principal series, one coordinate per basis vector of X
POINTS = ([3, 5, 7, 11], [2, 13, 17, 19], [Fraction(-3, 2), Fraction(7, 5), 23, 29])


class UsageError(Exception):
    pass


def _labels(text: Optional[str]) -> Optional[frozenset]:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--I0 expects a comma separated list of integers, got {text!r}") from None


def _qs(text: Optional[str]) -> Optional[List[Fraction]]:
    if text is None:
        return None
    try:
        return [Fraction(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--q expects a comma separated list of rationals, got {text!r}") from None


def _assign(ids: Sequence[int], qs: Optional[List[Fraction]], default=Fraction(4)) -> Dict[int, Fraction]:
    """One value per parameter class; a short list repeats its last entry."""
    qs = qs or [default]
    return {i: qs[min(k, len(qs) - 1)] for k, i in enumerate(sorted(ids))}


class Context:
    def __init__(self, args):
        self.args = args
        self.datum_params = None
        if args.datum:
            self.datum, self.datum_params = load_datum(args.datum)
        else:
            self.datum = build_root_datum(args.type, args.rank, args.lattice)
        self.corrupt = args.corrupt_sign
        self._W = None

    @property
    def W(self) -> WeylGroup:
        if self._W is None:
            self._W = WeylGroup(build_root_datum(self.datum.cartan_type, self.datum.rank, "root"))
        return self._W

    def affine_q(self, A: AffineHeckeAlgebra) -> Dict[int, Fraction]:
        qs = _qs(self.args.q)
        if self.datum_params is not None:
            base = qs[0] if qs else Fraction(4)
            return parameter_values(self.datum, self.datum_params, base)
        return _assign({s.id for s in A.symbols.values()}, qs)

    def finite_q(self, H: HeckeAlgebra) -> Dict[int, Fraction]:
        return _assign({s.id for s in H.symbols.values()}, _qs(self.args.q))


def run_solomon(ctx: Context) -> List[VerificationReport]:
    W = ctx.W
    return [solomon_check(W, chi, ctx.corrupt, label=f"chi{k} ")
            for k, chi in enumerate(irreducible_characters(W.whole))]


def run_hl_char(ctx: Context) -> List[VerificationReport]:
    W = ctx.W
    I0s = [ctx.args.I0] if ctx.args.I0 is not None else [frozenset({i}) for i in W.labels]
    out = []
    for I0 in I0s:
        S = W.stabilizer_s_I0(I0)
        for hk, H in enumerate(S.subgroups()):
            for k, chi in enumerate(irreducible_characters(H)):
                out.append(hl_character_check(W, I0, H, chi, ctx.corrupt, label=f"H{hk} chi{k} "))
    return out


def finite_test_modules(H: HeckeAlgebra, qv) -> list:
    """1-dim modules, rank 2 dihedral modules, and modules induced from parabolic 1-dim ones."""
    W = H.system
    mods = list(one_dimensional_modules(H, qv))
    if len(W.labels) == 2 and coxeter_order(W, *W.labels) in (3, 4, 6):
        mods += two_dimensional_modules(H, qv, *W.labels)
    for M in one_dimensional_modules(H, qv)[:2]:
        for s in W.labels:
            mods.append(ind(res(M, (s,)), (s,)))
    return mods


def run_kato_finite(ctx: Context) -> List[VerificationReport]:
    H = HeckeAlgebra.finite(ctx.W)
    qv = ctx.finite_q(H)
    return [kato_check(M, corrupt=ctx.corrupt) for M in finite_test_modules(H, qv)]


def affine_test_modules(A: AffineHeckeAlgebra, qv) -> list:
    n = A.datum.rank
    mods = [principal_series(A, qv, p[:n]) for p in POINTS]
    return mods + affine_one_dimensional_modules(A, qv)


def run_kato_affine(ctx: Context) -> List[VerificationReport]:
    A = AffineHeckeAlgebra(AffineWeylGroup(ctx.datum))
    qv = ctx.affine_q(A)
    return [kato_check(M, ctx.args.bound, ctx.corrupt) for M in affine_test_modules(A, qv)]


def run_intertwiner(ctx: Context) -> List[VerificationReport]:
    A = AffineHeckeAlgebra(AffineWeylGroup(ctx.datum))
    qv = ctx.affine_q(A)
    return [chi_intertwiner_check(M, ctx.corrupt) for M in affine_test_modules(A, qv)]


def run_involution(ctx: Context) -> List[VerificationReport]:
    A = AffineHeckeAlgebra(AffineWeylGroup(ctx.datum))
    b = ctx.args.bound
    return [involution_check(A, bound=b, parity_bound=b + 2, pair_bound=b if ctx.datum.rank == 1 else None,
                             corrupt=ctx.corrupt)]


def run_hl_analogue(ctx: Context) -> List[VerificationReport]:
    W = ctx.W
    I0 = ctx.args.I0 or frozenset()
    mode = "full-stabilizer" if I0 else "degenerate"
    try:
        rd = build_ramification(W, I0, mode)
    except errors.AssumptionViolated as exc:
        rep = VerificationReport("hl-analogue", dict(W.datum.descriptor(), I0=sorted(I0)))
        rep.records.append(CheckRecord("C(Lambda) trivial", "false", "true", False))
        rep.notes["hypothesis"] = str(exc)
        return [rep]
    E = rd.E
    qs = _qs(ctx.args.q)
    qv = _assign({s.id for s in E.symbols.values()}, qs, default=Fraction(9))
    mods = list(one_dimensional_modules(E, qv))
    if len(rd.R.labels) == 2 and coxeter_order(rd.R, *rd.R.labels) in (3, 4, 6):
        mods += two_dimensional_modules(E, qv, *rd.R.labels)
    out = []
    for M in mods:
        try:
            out.append(hl_analogue_check(rd, M, ctx.corrupt))
        except errors.NoGoodRepresentative as exc:
            rep = VerificationReport("hl-analogue", dict(W.datum.descriptor(), I0=sorted(I0), module=M.name))
            rep.records.append(CheckRecord("representative in V_Lambda", "none", "exists", False))
            rep.notes["hypothesis"] = str(exc)
            out.append(rep)
    return out


def run_complex(ctx: Context) -> List[VerificationReport]:
    return [complex_check(ctx.W, ctx.args.I0 or (), corrupt=ctx.corrupt)]


RUNNERS = {"solomon": run_solomon, "hl-char": run_hl_char, "kato-finite": run_kato_finite,
           "kato-affine": run_kato_affine, "intertwiner": run_intertwiner, "involution": run_involution,
           "hl-analogue": run_hl_analogue, "complex": run_complex}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heckeduality", description="Exact checks of Hecke algebra dualities.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", default="A", help="Cartan type (A, B, C, D, G)")
    common.add_argument("--rank", type=int, default=2)
    common.add_argument("--lattice", choices=("root", "weight"), default="root")
    common.add_argument("--datum", help="root datum description (JSON file or text)")
    common.add_argument("--q", help="parameter values, one per parameter class (comma list)")
    common.add_argument("--bound", type=int, default=6, help="length bound for affine trace witnesses")
    common.add_argument("--I0", type=str, default=None, help="comma list of simple root labels")
    common.add_argument("--out", help="directory for report files")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--corrupt-sign", action="store_true", help="flip the sign of the dual side")
    common.add_argument("--quiet", action="store_true", help="only print one summary line per report")
    sub = p.add_subparsers(dest="command", required=True)
    for name in SUITES + ("all",):
        aliases = ["kato"] if name == "kato-affine" else []
        sub.add_parser(name, parents=[common], aliases=aliases, help=f"run the {name} suite")
    return p


def _slug(rep: VerificationReport, k: int) -> str:
    inst = rep.instance
    base = f"{rep.suite}-{inst.get('type', '')}{inst.get('rank', '')}-{inst.get('lattice', '')}-{k:03d}"
    return re.sub(r"[^A-Za-z0-9_.-]", "_", base)


def emit(reports: List[VerificationReport], args) -> None:
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    for k, rep in enumerate(reports):
        text = rep.to_json() if args.format == "json" else rep.to_text()
        if args.out:
            ext = "json" if args.format == "json" else "txt"
            with open(os.path.join(args.out, _slug(rep, k) + "." + ext), "w") as fh:
                fh.write(text + "\n")
        if args.quiet:
            fail = rep.first_failure()
            print(f"{rep.suite}: {'PASS' if rep.passed else 'FAIL'} ({len(rep.records)} records)"
                  + (f" first discrepancy at {fail.witness}" if fail else ""))
        else:
            print(text)
            print()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = "kato-affine" if args.command == "kato" else args.command
    try:
        args.I0 = _labels(args.I0)
        ctx = Context(args)
        names = SUITES if command == "all" else (command,)
        reports = []
        for name in names:
            t0 = time.perf_counter()
            got = RUNNERS[name](ctx)
            dt = time.perf_counter() - t0
            for r in got:
                r.wall_time = dt / max(1, len(got))
            reports.extend(got)
    except UsageError as exc:
        parser.error(str(exc))
    except (errors.UnsupportedType, errors.IllegalParameter, errors.InconsistentParameters,
            errors.EmptySphere, errors.NotInNormalizer, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(reports, args)
    ok = all(r.passed for r in reports)
    print(f"overall: {'PASS' if ok else 'FAIL'} ({len(reports)} reports)")
    return 0 if ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
