"""ehc-lab command line: levis, chains, table, blocks, verify."""
from __future__ import annotations

import argparse
import sys

from .errors import ConfigError, EhcError
from .levi import enumerate_chains, enumerate_e_split_levis
from .rootdatum import build_group, multiplicative_order_e
from .verify import RunConfig, _rank_one, all_passed, run, to_csv, to_json

INT_KEYS = {"n", "q", "ell", "e", "verbosity", "max_chain_len"}
KEY_ALIASES = {"group": "gtype", "type": "gtype", "max-chain-len": "max_chain_len"}


def read_config(path: str) -> dict:
    """Flat key=value lines; repeated `suite=` keys accumulate; '#' starts a comment."""
    out = {"suites": []}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for no, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{no}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = KEY_ALIASES.get(key, key)
        if key == "suite":
            out["suites"].append(val)
        elif key in INT_KEYS:
            try:
                out[key] = int(val)
            except ValueError as exc:
                raise ConfigError(f"{path}:{no}: {key} must be an integer") from exc
        elif key == "parallel":
            out[key] = val.lower() in ("1", "true", "yes", "on")
        elif key in ("gtype", "out", "csv"):
            out[key] = val
        else:
            raise ConfigError(f"{path}:{no}: unknown key {key}")
    return out


def build_config(args) -> RunConfig:
    base = read_config(args.config) if getattr(args, "config", None) else {"suites": []}
    for attr, key in (("group", "gtype"), ("n", "n"), ("q", "q"), ("ell", "ell"), ("e", "e"),
                      ("out", "out"), ("csv", "csv"), ("max_chain_len", "max_chain_len")):
        val = getattr(args, attr, None)
        if val is not None:
            base[key] = val
    if getattr(args, "suite", None):
        base["suites"] = list(args.suite)
    if getattr(args, "parallel", False):
        base["parallel"] = True
    if getattr(args, "verbose", 0):
        base["verbosity"] = args.verbose
    base["suites"] = tuple(base["suites"])
    return RunConfig(**base)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ehc-lab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config")
        sp.add_argument("--group", choices=["GL", "SL", "gl", "sl"])
        sp.add_argument("--n", type=int)
        sp.add_argument("--q", type=int)
        sp.add_argument("--ell", type=int)
        sp.add_argument("--e", type=int)
        sp.add_argument("--max-chain-len", dest="max_chain_len", type=int)
        sp.add_argument("-v", "--verbose", action="count", default=0)

    for name in ("levis", "chains", "table", "blocks"):
        common(sub.add_parser(name))
    v = sub.add_parser("verify")
    common(v)
    v.add_argument("--suite", action="append")
    v.add_argument("--out")
    v.add_argument("--csv")
    v.add_argument("--parallel", action="store_true")
    return p


def _e_only(cfg: RunConfig) -> int:
    """e from --e, else from --ell; used by the commands that do not need ell."""
    if cfg.e is not None:
        return cfg.e
    if cfg.ell is None:
        raise ConfigError("give --e or --ell")
    return multiplicative_order_e(cfg.q, cfg.ell)


def cmd_levis(cfg: RunConfig) -> int:
    e = _e_only(cfg)
    R, F, _ = build_group(cfg.gtype.upper(), cfg.n, cfg.q)
    levis = enumerate_e_split_levis(R, F, e)
    print(f"{len(levis)} {e}-split Levi classes of {cfg.gtype.upper()}_{cfg.n}({cfg.q})")
    for L in levis:
        print(f"  {L.label}  |L^F| = {L.order(cfg.q)}  |W_G(L)^F| = {L.relative_weyl_order}")
    return 0


def cmd_chains(cfg: RunConfig) -> int:
    e = _e_only(cfg)
    R, F, _ = build_group(cfg.gtype.upper(), cfg.n, cfg.q)
    enum = enumerate_chains(R, F, e, cfg.max_chain_len)
    print(f"{enum.stats.n_orbits} {e}-split Levi chain classes, {enum.stats.total_chains} chains")
    for c in enum.chains:
        print(f"  {c}  |G_sigma| = {c.stabiliser_order}")
    return 0


def _instance(cfg: RunConfig):
    return _rank_one(cfg)


def cmd_table(cfg: RunConfig) -> int:
    cfg.gtype = cfg.gtype.upper()
    inst = _instance(cfg)
    print(f"{inst.name}: {len(inst.characters)} characters, generic table matches Dixon table")
    for i in range(len(inst.characters)):
        print(f"  {inst.label(i)}  degree {inst.degree(i)}")
    return 0


def cmd_blocks(cfg: RunConfig) -> int:
    cfg.validate()
    inst = _instance(cfg)
    bd = inst.block_data(cfg.ell)
    print(f"{len(bd.blocks)} {cfg.ell}-blocks of {inst.name}")
    for B in bd.blocks:
        names = ", ".join(inst.label(inst.match.generic_of[i]) for i in B.members)
        print(f"  B{B.index} defect {B.defect}: {names}")
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    report = run(cfg)
    text = to_json(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cfg.csv:
        with open(cfg.csv, "w", encoding="utf-8") as fh:
            fh.write(to_csv(report))
    ok = all_passed(report)
    if cfg.verbosity or cfg.out:
        for name, s in report["suites"].items():
            verdicts = [it["verdict"] for it in s["items"]]
            summary = ", ".join(f"{v}={verdicts.count(v)}" for v in sorted(set(verdicts)))
            print(f"{name}: {summary}", file=sys.stderr)
    return 0 if ok else 1


COMMANDS = {"levis": cmd_levis, "chains": cmd_chains, "table": cmd_table,
            "blocks": cmd_blocks, "verify": cmd_verify}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        cfg = build_config(args)
        return COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"ehc-lab: configuration error: {exc}", file=sys.stderr)
        return 2
    except (EhcError, ValueError) as exc:
        print(f"ehc-lab: {exc}", file=sys.stderr)
        return 2


def cli_main(argv=None) -> int:
    """Entry point returning the exit code without raising SystemExit for argparse errors."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
