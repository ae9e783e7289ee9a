"""Command-line entry point.

Exit status: 0 success, 2 usage error, 3 domain error, 4 enumeration budget
exceeded.
"""

from __future__ import annotations

import argparse
import os
import secrets
import sys
from typing import Sequence

from . import catalog
from .additive_sss import (
    AdditiveScheme,
    deal_additive,
    detect_cheaters,
    recover_additive,
    usable_recovery,
)
from .codes import Code, is_self_dual, read_code, weight_distribution
from .designs import (
    am_additive_report,
    am_linear_report,
    extremal_strengths,
    one_design_condition,
    support_multiplicities,
    verify_generalized_design,
    words_of_weight,
)
from .errors import BudgetExceeded, DomainError, PreconditionError, UnknownName
from .field import F4
from .linear_sss import LinearScheme, deal_linear, find_recovery_linear, recover_linear
from .report import (
    additive_access_report,
    analytic_access_report,
    linear_access_report,
    render,
)
from .shares import format_shares, parse_shares

EXIT_USAGE, EXIT_DOMAIN, EXIT_BUDGET = 2, 3, 4


class UsageError(Exception):
    pass


def resolve(source: str) -> catalog.CatalogEntry:
    if source in catalog.NAMES:
        return catalog.get(source)
    if os.path.isfile(source):
        code = read_code(source)
        return catalog.CatalogEntry(code.name or source, code, None, f"file {source}")
    raise UsageError(f"{source!r} is neither a catalog name ({', '.join(catalog.NAMES)}) nor a file")


def _need_code(entry: catalog.CatalogEntry) -> Code:
    if entry.code is None:
        raise PreconditionError(f"{entry.name} has only a weight enumerator; this command needs a generator matrix")
    return entry.code


def _scheme(code: Code):
    return LinearScheme(code) if code.kind == "linear" else AdditiveScheme(code)


def _read_shares(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_shares(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read shares file: {exc}") from None


def _fmt_check(check) -> str:
    if check is None:
        return "not a design"
    s = f"{check.t}-({check.v},{check.kb},{check.lam}) blocks={check.num_blocks} distinct={check.distinct_blocks}"
    if check.multiplicity_gcd > 1:
        s += f" reduced_lambda={check.reduced_lam}"
    return s


def _largest_am(code: Code):
    am = am_linear_report if code.kind == "linear" else am_additive_report
    best = None
    d = weight_distribution(code).minimum_distance
    for t in range(1, d):
        rep = am(code, t, verify=False)
        if rep.hypothesis:
            best = t
    return am(code, best, verify=True) if best else None


def _am_lines(rep) -> list[str]:
    lines = [f"assmus_mattson t={rep.t} s={rep.s} hypothesis={'yes' if rep.hypothesis else 'no'}"]
    for label, checks in (("code", rep.verified_code), ("dual", rep.verified_dual)):
        for w, chk in checks.items():
            lines.append(f"design {label} weight {w}: {_fmt_check(chk)}")
    if rep.min_weight_repetitions:
        reps = "  ".join(f"{r}x:{c}" for r, c in rep.min_weight_repetitions.items())
        lines.append(f"min_weight_support_repetitions {reps}")
    return lines


def cmd_analyze(args, entry) -> str:
    wd = entry.weights()
    lines = [f"code {entry.name}", f"provenance {entry.provenance}", f"n {wd.n}",
             f"weight_enumerator {wd.polynomial()}", f"min_distance {wd.minimum_distance}"]
    if entry.code is not None:
        code = entry.code
        lines.insert(2, f"kind {code.kind} over {code.field} k={code.k}")
        lines.append(f"self_dual {'yes' if is_self_dual(code) else 'no'}")
        rep = _largest_am(code)
        lines += _am_lines(rep) if rep else ["assmus_mattson no strength t satisfies the hypothesis"]
    try:
        t, g = extremal_strengths(wd.n)
        lines.append(f"extremal_design_strengths t={t} generalized={g if g is not None else '-'}")
    except DomainError as exc:
        lines.append(f"extremal_design_strengths n/a ({exc})")
    lines.append(f"one_design_condition {'yes' if one_design_condition(wd.n, wd.minimum_distance) else 'no'}")
    return "\n".join(lines) + "\n"


def cmd_designs(args, entry) -> str:
    code = _need_code(entry)
    rep = (am_linear_report if code.kind == "linear" else am_additive_report)(code, args.t)
    lines = [f"code {entry.name}"] + _am_lines(rep)
    if code.field == "gf4":
        for w in weight_distribution(code).nonzero_weights():
            words = words_of_weight(code, w)
            mu = verify_generalized_design(words, args.t)
            reps = "  ".join(f"{r}x:{c}" for r, c in sorted(support_multiplicities(words).items()))
            lines.append(f"generalized weight {w}: " + (f"mu_{args.t}={mu}" if mu is not None else "not a design")
                         + f"  support_repetitions {reps}")
    return "\n".join(lines) + "\n"


def cmd_deal(args, entry) -> str:
    code = _need_code(entry)
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(63)
        print(f"seed {seed}", file=sys.stderr)
    try:
        secret = F4.from_symbol(args.secret)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    scheme = _scheme(code)
    if code.kind == "linear":
        shares, _ = deal_linear(scheme, secret, seed)
    else:
        shares, _ = deal_additive(scheme, secret, seed)
    text = format_shares(shares, code.kind, entry.name)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        return ""
    return text


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--pair expects i,j with i, j in 1..3, got {text!r}") from None
    if {i, j} - {1, 2, 3} or i == j:
        raise UsageError(f"--pair expects two distinct classes from 1..3, got {text!r}")
    return i, j


def cmd_recover(args, entry) -> str:
    code = _need_code(entry)
    _, shares = _read_shares(args.shares)
    scheme = _scheme(code)
    if code.kind == "linear":
        coeffs = find_recovery_linear(scheme.dual, shares)
        if coeffs is None:
            raise PreconditionError("the present shares contain no authorized group")
        return f"{recover_linear(shares, coeffs).symbol}\n"
    usable = usable_recovery(scheme.classes, shares)
    if args.pair:
        i, j = _parse_pair(args.pair)
        missing = [k for k in (i, j) if k not in usable]
        if missing:
            raise PreconditionError(f"no recovery vector of class H{missing[0]} is covered by the present shares")
    else:
        if len(usable) < 2:
            raise PreconditionError("the present shares cover recovery vectors of fewer than two classes")
        i, j = sorted(usable, key=lambda k: (usable[k].weight, k))[:2]
    return f"{recover_additive(usable[i], usable[j], shares).symbol}\n"


def cmd_access(args, entry) -> bytes:
    if args.analytic:
        if entry.code is not None and entry.code.kind == "linear" and entry.code.field == "gf2":
            raise PreconditionError("the analytic path applies to additive codes over GF(4)")
        rep = analytic_access_report(entry.weights(), entry.name)
    else:
        code = _need_code(entry)
        rep = (linear_access_report if code.kind == "linear" else additive_access_report)(code, entry.name)
    return render(rep, args.format)


def cmd_cheaters(args, entry) -> str:
    code = _need_code(entry)
    _, shares = _read_shares(args.shares)
    secret = None
    if args.secret is not None:
        try:
            secret = F4.from_symbol(args.secret)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    rep = detect_cheaters(_scheme(code), shares, secret)
    flagged = " ".join(f"P{i}" for i in sorted(rep.cheaters)) or "-"
    return (f"status {rep.status.value}\ndistance {rep.distance}\n"
            f"effective_min_distance {rep.effective_distance}\ncheaters {flagged}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gf4sss", description="Secret sharing from codes over GF(4).")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("code", help="catalog name or code file")
        return sp

    add("analyze", "enumerator, distance, self-duality, designs")
    sp = add("deal", "deal shares of a secret")
    sp.add_argument("--secret", required=True, help="one of 0 1 w W")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--out")
    sp = add("recover", "recover the secret from a shares file")
    sp.add_argument("--shares", required=True)
    sp.add_argument("--pair", help="classes i,j (additive schemes)")
    sp = add("access", "access-structure report")
    sp.add_argument("--analytic", action="store_true", help="use the weight enumerator only")
    sp.add_argument("--format", choices=("text", "jsonl"), default="text")
    sp = add("designs", "verify designs held by the code")
    sp.add_argument("--t", type=int, required=True)
    sp = add("cheaters", "locate corrupted shares")
    sp.add_argument("--shares", required=True)
    sp.add_argument("--secret", help="known secret; enlarges the decoding radius")
    return p


COMMANDS = {
    "analyze": cmd_analyze, "deal": cmd_deal, "recover": cmd_recover,
    "access": cmd_access, "designs": cmd_designs, "cheaters": cmd_cheaters,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        entry = resolve(args.code)
        out = COMMANDS[args.command](args, entry)
    except (UsageError, UnknownName) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    data = out if isinstance(out, bytes) else out.encode()
    sys.stdout.buffer.write(data)
    sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
