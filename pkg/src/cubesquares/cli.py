"""Command-line entry point: enumerate / local / arcs / census.

Every run is described by a RunConfig whose hash is embedded in each
output artifact (inline for JSON/TSV, via .meta.json sidecar for the
fixed-format CSV/binary tables).  Exit codes: 0 success, 2 capacity,
3 verification failure, 4 bad configuration.  Runs are sequential and
deterministic for a fixed config (the --threads flag caps worker
parallelism but never changes reduction order).
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .arcs import ArcDissection, classify
from .census import family_members_upto, filter_A_upsilon, run_census, verify_obstruction_family, witness_for
from .cubesieve import BUDGET_ENV, sieve_cube_sums
from .errors import CapacityError, DegenerateParamsError, QuadratureError, VerificationError
from .expsums import complete_sum_S_batch, truncated_singular_series
from .localsolve import hensel_certificate, mod27_square_sets, sigma_p, two_adic_profile
from .mainterm import RnEvaluator, exact_Rn, main_term_report, rn_dense_dft
from .oscillatory import osc_integral_v, v_at_zero
from .params import derive_params
from .smooth import enumerate_smooth, estimate_c_eta
from .w2 import w2_scan
from .weights import WeightTable, build_weight_table, save_binary, save_csv


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    options: dict

    @property
    def hash(self) -> str:
        payload = json.dumps({"cmd": self.subcommand, **self.options}, sort_keys=True, default=str)
        return hashlib.sha256(payload.encode()).hexdigest()[:12]


def _meta(cfg: RunConfig) -> dict:
    return {"config_hash": cfg.hash, "version": __version__}


def _write_json(path: Path, cfg: RunConfig, payload: dict) -> None:
    doc = {**_meta(cfg), **payload}
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path}")


def _write_tsv(path: Path, cfg: RunConfig, header: list[str], rows) -> None:
    with open(path, "w") as f:
        f.write(f"# config={cfg.hash} version={__version__}\n")
        f.write("\t".join(header) + "\n")
        for row in rows:
            f.write("\t".join(str(x) for x in row) + "\n")
    print(f"wrote {path}")


# -- subcommands ---------------------------------------------------------------


def cmd_enumerate(args, cfg: RunConfig, out: Path) -> int:
    if args.csums is not None:
        sieve = sieve_cube_sums(args.csums, with_counts=args.r3)
        members = sieve.members.tolist()
        rows = [(m, sieve.r3(m)) for m in members] if args.r3 else [(m,) for m in members]
        _write_tsv(out / f"cube_sums_{args.csums}.tsv", cfg, ["value", "r3"] if args.r3 else ["value"], rows)
        print("members:", members)
    if args.smooth is not None:
        s = enumerate_smooth(args.smooth, args.bound)
        _write_tsv(out / f"smooth_{args.smooth}_{args.bound}.tsv", cfg, ["value"], [(v,) for v in s])
        print("members:", list(s))
        print(f"density {len(s) / max(args.smooth, 1):.6f}")
    if args.table is not None:
        params = derive_params(args.N, eta=args.eta, R_override=args.R)
        table = build_weight_table(params, args.table)
        base = out / f"weights_{args.table}_N{args.N}"
        if args.format == "csv":
            save_csv(table, base.with_suffix(".csv"))
            Path(str(base.with_suffix(".csv")) + ".meta.json").write_text(json.dumps(_meta(cfg), indent=2))
        else:
            save_binary(table, base.with_suffix(".wcl"), meta=_meta(cfg))
        print(f"wrote {base} ({len(table)} pairs, total mass {table.total})")
    return 0


def cmd_local(args, cfg: RunConfig, out: Path) -> int:
    if args.verify_sets:
        A, B, AB = mod27_square_sets(verify=True)
        print("A  =", sorted(A))
        print("B  =", sorted(B))
        print("A+B =", sorted(AB))
    if args.sqa is not None:
        q = args.sqa
        row = complete_sum_S_batch(q)
        _write_tsv(out / f"sqa_{q}.tsv", cfg, ["a", "re", "im"], [(a, v.real, v.imag) for a, v in enumerate(row)])
    if args.sn is not None:
        tr = truncated_singular_series(args.sn, args.Q)
        _write_json(out / f"series_n{args.sn}_Q{args.Q}.json", cfg, {
            "n": tr.n, "Q": tr.Q, "value": tr.value,
            "dyadic_tails": {str(k): v for k, v in tr.tails.items()},
        })
        print(f"S({args.sn}; Q={args.Q}) = {tr.value:.9f}")
    if args.sigma_p is not None:
        est = sigma_p(args.sigma_p, args.n, h_max=args.hmax)
        _write_json(out / f"sigma_p{args.sigma_p}_n{args.n}.json", cfg, {
            "p": est.p, "n": est.n, "values": est.values, "deltas": est.deltas,
            "converged": est.converged, "h_used": est.h_used,
        })
        print(f"sigma_{est.p}({est.n}) levels: {est.values}")
    if args.w2_max is not None:
        w2sq, majorant_ok, equality = w2_scan(args.w2_max)
        payload = {"Q": args.w2_max, "sum_w2_squared": float(w2sq[1:].sum()), "equality_cases": equality}
        if args.check_majorant:
            payload["majorant_holds"] = majorant_ok
            if not majorant_ok:
                raise VerificationError("w2 majorant failed")
            print(f"w2(q) <= q^(-1/6) verified for q <= {args.w2_max}; equality at {equality}")
        _write_json(out / f"w2_Q{args.w2_max}.json", cfg, payload)
    if args.certificate is not None:
        cert = hensel_certificate(args.certificate, args.n)
        _write_json(out / f"certificate_p{args.certificate}_n{args.n}.json", cfg, cert.as_json_dict())
        print(f"certificate p={cert.p} n={cert.n} modulus={cert.modulus} checked={cert.condition_checked}")
    if args.two_adic is not None:
        prof = two_adic_profile(args.two_adic)
        prof.verify()
        _write_json(out / f"two_adic_{args.two_adic}.json", cfg, {
            "n": prof.n, "h": prof.h, "gamma": prof.gamma, "theta": prof.theta,
            "witness": list(prof.witness), "euler_floor": prof.euler_floor,
        })
        print(f"n={prof.n}: gamma={prof.gamma} theta={prof.theta} witness={prof.witness}")
    return 0


def _toy_tables() -> tuple[WeightTable, WeightTable, list[int]]:
    one = np.array([1], dtype=np.int64)
    three = np.array([3], dtype=np.int64)
    return (
        WeightTable(role="a", support=three, counts=one),
        WeightTable(role="b", support=three, counts=one),
        [2],
    )


def cmd_arcs(args, cfg: RunConfig, out: Path) -> int:
    if args.classify is not None:
        n = args.n or 10**4
        hit = classify(args.classify, args.X, n)
        if hit is None:
            print(f"alpha={args.classify}: minor region (X={args.X}, n={n})")
        else:
            print(f"alpha={args.classify}: arc (a={hit.a}, q={hit.q}), beta={hit.beta:.3g}")
    if args.v_at_zero:
        params = derive_params(args.N, eta=args.eta, R_override=args.R)
        closed = v_at_zero(params)
        k = osc_integral_v(0.0, params, method="kernel1d")
        c = osc_integral_v(0.0, params, method="cubature3d")
        print(f"v(0): closed={closed} kernel1d={k.real:.9g} cubature3d={c.real:.9g}")
        for name, val in (("kernel1d", k), ("cubature3d", c)):
            if abs(val - closed) > 1e-6 * closed:
                raise VerificationError(f"v(0) via {name} = {val} drifts from {closed}")
    if args.v_sweep:
        params = derive_params(args.N, eta=args.eta, R_override=args.R)
        rows = []
        for i in range(args.sweep_points):
            beta = args.beta_max * i / max(args.sweep_points - 1, 1) / params.N
            val = osc_integral_v(beta, params, method="kernel1d")
            rows.append((f"{beta:.6e}", f"{val.real:.9e}", f"{val.imag:.9e}", f"{abs(val):.9e}"))
        _write_tsv(out / f"v_sweep_N{args.N}.tsv", cfg, ["beta", "re", "im", "abs"], rows)
    if args.rn_exact:
        if args.toy:
            ta, tb, primes = _toy_tables()
            ev = RnEvaluator(ta, tb, primes)
            dense = rn_dense_dft(ta, tb, primes)
            support = np.flatnonzero(dense)
            rows = [(int(n), int(dense[n])) for n in support]
            _write_tsv(out / "rn_toy.tsv", cfg, ["n", "R"], rows)
            for n, r in rows:
                if ev(n) != r:
                    raise VerificationError(f"toy R({n}) mismatch: {ev(n)} vs {r}")
            print(f"toy R: support {rows}")
        else:
            params = derive_params(args.N, eta=args.eta, R_override=args.R)
            ta = build_weight_table(params, "a")
            tb = build_weight_table(params, "b")
            primes = params.default_primes()
            ev = RnEvaluator(ta, tb, primes)
            ns = range(args.N // 2, args.N + 1, max(1, args.N // 2 // args.sweep_points))
            rows = [(n, ev(n)) for n in ns]
            _write_tsv(out / f"rn_N{args.N}.tsv", cfg, ["n", "R"], rows)
    if args.report is not None:
        params = derive_params(args.N, eta=args.eta, R_override=args.R)
        ta = build_weight_table(params, "a")
        tb = build_weight_table(params, "b")
        primes = params.default_primes() or [2]
        rep = main_term_report(args.report, params, ta, tb, primes, Q=args.Q, seed=args.seed)
        _write_json(out / f"report_n{args.report}.json", cfg, rep.as_json_dict())
        print(f"n={rep.n}: R={rep.R_exact} predicted={rep.predicted:.6g} ratio={rep.ratio:.6g}")
    return 0


def cmd_census(args, cfg: RunConfig, out: Path) -> int:
    if args.family:
        for j in range(args.jmax + 1):
            proof = verify_obstruction_family(j)
            print(f"j={j}: n=2^{6 + 12 * j} obstructed (descents={proof.descents}, root=4 mod 9)")
        print(f"{args.jmax + 1} family members confirmed")
    if args.N is not None:
        census = run_census(args.N)
        payload = {
            "N": census.N,
            "E_count": census.E_count,
            "family_hits": family_members_upto(census.N),
            "density_curve": census.density_curve(),
        }
        _write_json(out / f"census_{args.N}.json", cfg, payload)
        print(f"N={census.N}: |E| = {census.E_count}")
        if args.witnesses:
            rows = []
            for n in np.flatnonzero(census.representable).tolist():
                wit = witness_for(census, n)
                if wit is not None:
                    rows.append((n, *wit))
            _write_tsv(out / f"witnesses_{args.N}.tsv", cfg, ["n", "c1", "c2", "c3", "c4"], rows)
    if args.filter_upsilon is not None:
        f = filter_A_upsilon(args.N or 10**6, args.filter_upsilon)
        _write_json(out / f"filter_u{args.filter_upsilon}.json", cfg, dataclasses.asdict(f))
        print(f"k={f.k} modulus={f.modulus} count={f.count}")
    return 0


# -- wiring ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubesquares", description=__doc__)
    ap.add_argument("--config", type=Path, help="JSON file of defaults, mirrored by the flags")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--out", type=Path, default=Path("."), help="output directory")
        p.add_argument("--seed", type=int, default=2024)
        p.add_argument("--threads", type=int, default=None, help="worker cap (reductions stay deterministic)")
        p.add_argument("--eta", type=float, default=0.1)
        p.add_argument("--R", type=int, default=None, help="smoothness bound override")

    pe = sub.add_parser("enumerate", help="cube-sum sieves, smooth sets, weight tables")
    common(pe)
    pe.add_argument("--csums", type=int, help="sieve sums of three cubes up to X")
    pe.add_argument("--r3", action="store_true", help="include representation counts")
    pe.add_argument("--smooth", type=int, help="enumerate smooth numbers up to Y")
    pe.add_argument("--bound", type=int, default=2, help="smoothness bound R")
    pe.add_argument("--table", choices=["a", "b"], help="build a weight table")
    pe.add_argument("--N", type=int, default=8**6)
    pe.add_argument("--format", choices=["bin", "csv"], default="csv")

    pl = sub.add_parser("local", help="exponential sums, Euler factors, certificates, w2")
    common(pl)
    pl.add_argument("--verify-sets", "--verify-paper-sets", dest="verify_sets", action="store_true",
                    help="recompute the three mod-27 square classes against their frozen tables")
    pl.add_argument("--sqa", type=int, help="emit the S(q, a) row for this q")
    pl.add_argument("--sn", type=int, help="truncated singular series at this n")
    pl.add_argument("--Q", type=int, default=64, help="series truncation")
    pl.add_argument("--sigma-p", dest="sigma_p", type=int, help="Euler factor estimate at prime p")
    pl.add_argument("--n", type=int, default=1)
    pl.add_argument("--hmax", type=int, default=3)
    pl.add_argument("--w2-max", dest="w2_max", type=int, help="scan w2 up to Q")
    pl.add_argument("--check-majorant", dest="check_majorant", action="store_true")
    pl.add_argument("--certificate", type=int, help="solubility certificate at prime p (uses --n)")
    pl.add_argument("--two-adic", dest="two_adic", type=int, help="2-adic profile of n")

    pa = sub.add_parser("arcs", help="arc classification, oscillatory integrals, main-term reports")
    common(pa)
    pa.add_argument("--classify", type=float, help="classify alpha in [0,1)")
    pa.add_argument("--X", type=float, default=2.0, help="dissection height")
    pa.add_argument("--n", type=int, default=None, help="dissection scale")
    pa.add_argument("--v-at-zero", dest="v_at_zero", action="store_true")
    pa.add_argument("--v-sweep", dest="v_sweep", action="store_true", help="v(beta) decay table")
    pa.add_argument("--beta-max", dest="beta_max", type=float, default=10.0, help="sweep up to beta_max / N")
    pa.add_argument("--sweep-points", dest="sweep_points", type=int, default=21)
    pa.add_argument("--rn-exact", dest="rn_exact", action="store_true", help="exact R(n) table")
    pa.add_argument("--toy", action="store_true", help="use the frozen single-entry tables")
    pa.add_argument("--report", type=int, help="MainTermReport at this n")
    pa.add_argument("--Q", type=int, default=64)
    pa.add_argument("--N", type=int, default=8**6)

    pc = sub.add_parser("census", help="exceptional-set census and obstruction family")
    common(pc)
    pc.add_argument("--N", type=int, default=None)
    pc.add_argument("--witnesses", action="store_true")
    pc.add_argument("--family", action="store_true")
    pc.add_argument("--jmax", type=int, default=3)
    pc.add_argument("--filter-upsilon", dest="filter_upsilon", type=float)
    return ap


_DISPATCH = {
    "enumerate": cmd_enumerate,
    "local": cmd_local,
    "arcs": cmd_arcs,
    "census": cmd_census,
}


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad usage; remap to the bad-config code
        return 0 if e.code in (0, None) else 4
    if args.config:
        try:
            defaults = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as e:
            print(f"bad config file: {e}", file=sys.stderr)
            return 4
        for k, v in defaults.items():
            if getattr(args, k, None) in (None, False):
                setattr(args, k, v)
    options = {k: v for k, v in vars(args).items() if k not in ("config",) and not isinstance(v, Path)}
    cfg = RunConfig(subcommand=args.subcommand, options=options)
    out = args.out
    out.mkdir(parents=True, exist_ok=True)
    try:
        return _DISPATCH[args.subcommand](args, cfg, out)
    except CapacityError as e:
        print(f"capacity: {e}", file=sys.stderr)
        return 2
    except (VerificationError, QuadratureError) as e:
        print(f"verification failure: {e}", file=sys.stderr)
        return 3
    except (DegenerateParamsError, ValueError) as e:
        print(f"bad configuration: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
