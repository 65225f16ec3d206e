"""Batch front-end: ``ordext --config query.toml``.

The config is TOML with four sections: ``[group]``, ``[field]`` (plus the
optional ``[coefficients]``), ``[characters.<name>]`` and ``[query]``. Simple
roots are numbered from 1 in configs and reports. See README.md for the
grammar.

Exit codes: 0 success, 1 parse error, 2 validation error, 3 formula requested
outside its proved range without ``--override-validity``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any

import tomli
import yaml

from .characters import (
    CharacterGroup,
    FieldData,
    Mode,
    PadicCharacter,
    TorusCharacter,
    compose_root,
    cyclotomic,
    reflect,
    restrict_ambient,
    trivial,
    trivial_torus,
)
from .errors import OrdextError, ValidationError, ValidityDomain
from .ext_calculator import (
    ExtReport,
    autoext_modp,
    classify_irregular,
    dim_ext1_principal_series,
    ext_ordinary,
)
from .ordinary_parts import OrdinaryRepDescriptor, bruhat_graded, hord
from .root_datum import (
    ParabolicData,
    RootDatum,
    builtin,
    center_component_group,
    classify_rank_one,
)
from .weyl import (
    DEFAULT_MAX_WEYL,
    SpecialRepLabel,
    alpha_w,
    n_w_dimension,
    w_BQ,
    w_sigma,
    weyl_group,
)

QUERIES = ("roots", "weyl", "wsigma", "hord", "ext-ps", "autoext", "ext-ord", "irregular")


class ConfigError(OrdextError):
    """Malformed config; the message names the offending key."""


# --- config access --------------------------------------------------------------


def _get(table: dict, key: str, where: str, kind=None, default=...):
    if key not in table:
        if default is ...:
            raise ConfigError(f"missing key '{where}.{key}'")
        return default
    value = table[key]
    if kind is not None and not _is(value, kind):
        raise ConfigError(f"key '{where}.{key}' has the wrong type (expected {_kind_name(kind)})")
    return value


def _is(value, kind) -> bool:
    if kind is int:
        return isinstance(value, int) and not isinstance(value, bool)
    if kind == "intlist":
        return isinstance(value, list) and all(_is(v, int) for v in value)
    if kind == "matrix":
        return isinstance(value, list) and all(_is(v, "intlist") for v in value)
    return isinstance(value, kind)


def _kind_name(kind) -> str:
    return {int: "integer", str: "string", bool: "boolean", dict: "table", list: "list"}.get(kind, str(kind))


def _check_keys(table: dict, allowed, where: str):
    for k in table:
        if k not in allowed:
            raise ConfigError(f"unknown key '{where}.{k}'")


def _roots(values, where: str, rd: RootDatum) -> tuple[int, ...]:
    """1-based root indices from the config to 0-based."""
    out = []
    for v in values:
        if not 1 <= v <= rd.semisimple_rank:
            raise ValidationError(f"'{where}' names simple root {v}, but there are {rd.semisimple_rank}")
        out.append(v - 1)
    return tuple(sorted(set(out)))


def _one_based(indices) -> list[int]:
    return [i + 1 for i in indices]


# --- building the context ----------------------------------------------------


@dataclass
class Context:
    rd: RootDatum
    group: CharacterGroup
    raw_characters: dict[str, dict]
    torus: dict[str, TorusCharacter] = field(default_factory=dict)
    scalars: dict[str, PadicCharacter] = field(default_factory=dict)
    _resolving: set = field(default_factory=set)


def build_group(cfg: dict) -> RootDatum:
    g = _get(cfg, "group", "", dict)
    _check_keys(g, {"name", "rank", "simple_roots", "simple_coroots"}, "group")
    if "rank" in g or "simple_roots" in g:
        return RootDatum(
            _get(g, "rank", "group", int),
            tuple(map(tuple, _get(g, "simple_roots", "group", "matrix"))),
            tuple(map(tuple, _get(g, "simple_coroots", "group", "matrix"))),
            name=_get(g, "name", "group", str, None),
        )
    return builtin(_get(g, "name", "group", str))


def build_character_group(cfg: dict) -> CharacterGroup:
    f = _get(cfg, "field", "", dict)
    _check_keys(f, {"p", "degree", "residue_card"}, "field")
    fd = FieldData(
        _get(f, "p", "field", int),
        _get(f, "degree", "field", int, 1),
        _get(f, "residue_card", "field", int, None),
    )
    c = _get(cfg, "coefficients", "", dict, {})
    _check_keys(c, {"mode", "value_card", "value_order", "cyclotomic_unramified"}, "coefficients")
    mode_name = _get(c, "mode", "coefficients", str, Mode.SMOOTH_MOD_P.value)
    try:
        mode = Mode(mode_name)
    except ValueError:
        raise ConfigError(f"key 'coefficients.mode' must be one of {[m.value for m in Mode]}") from None
    cyc = _get(c, "cyclotomic_unramified", "coefficients", int, 0)
    if mode is Mode.SMOOTH_MOD_P:
        if "value_order" in c:
            raise ConfigError("key 'coefficients.value_order' is for continuous mode; use 'value_card'")
        return CharacterGroup.mod_p(fd, _get(c, "value_card", "coefficients", int, None), cyclotomic_unramified=cyc)
    if "value_card" in c:
        raise ConfigError("key 'coefficients.value_card' is for smooth-mod-p mode; use 'value_order'")
    return CharacterGroup.continuous(fd, _get(c, "value_order", "coefficients", int, 2), cyclotomic_unramified=cyc)


_COORD_KEYS = {"unramified", "tame", "wild", "sign2", "cyclotomic"}


def parse_padic(lit: dict, group: CharacterGroup, where: str) -> PadicCharacter:
    """One coordinate literal: unramified / tame / wild / sign2 / cyclotomic."""
    if not isinstance(lit, dict):
        raise ConfigError(f"'{where}' must be a table")
    _check_keys(lit, _COORD_KEYS, where)
    unr = lit.get("unramified", 0)
    root, symbols = 0, {}
    if isinstance(unr, bool):
        raise ConfigError(f"key '{where}.unramified' has the wrong type")
    if isinstance(unr, int):
        root = unr
    elif isinstance(unr, str):
        symbols = {unr: 1}
    elif isinstance(unr, dict):
        for k, v in unr.items():
            if k == "root":
                root = _get(unr, "root", f"{where}.unramified", int)
            elif _is(v, int):
                symbols[k] = v
            else:
                raise ConfigError(f"key '{where}.unramified.{k}' has the wrong type (expected integer)")
    else:
        raise ConfigError(f"key '{where}.unramified' has the wrong type")
    wild = _get(lit, "wild", where, dict, {})
    canonical, wild_symbols = 0, {}
    for k, v in wild.items():
        if not _is(v, int):
            raise ConfigError(f"key '{where}.wild.{k}' has the wrong type (expected integer)")
        if k == "eps":
            canonical = v
        else:
            wild_symbols[k] = v
    chi = PadicCharacter(
        group,
        root,
        symbols,
        _get(lit, "tame", where, int, 0),
        canonical,
        wild_symbols,
        _get(lit, "sign2", where, int, 0),
    )
    k = _get(lit, "cyclotomic", where, int, 0)
    return chi * cyclotomic(group) ** k if k else chi


_CHAR_KEYS = {"coords", "ambient", "scalar", "trivial", "base", "compose", "reflect", "root_twists", "times", "power"}


def resolve_scalar(ctx: Context, name: str, where: str) -> PadicCharacter:
    if name in ctx.scalars:
        return ctx.scalars[name]
    entry = ctx.raw_characters.get(name)
    if entry is None:
        raise ValidationError(f"'{where}' refers to undefined character '{name}'")
    if "scalar" not in entry:
        raise ValidationError(f"'{where}' needs a character of F^x but '{name}' is a torus character")
    _check_keys(entry, {"scalar"}, f"characters.{name}")
    ctx.scalars[name] = parse_padic(entry["scalar"], ctx.group, f"characters.{name}.scalar")
    return ctx.scalars[name]


def resolve_torus(ctx: Context, name: str, where: str) -> TorusCharacter:
    if name in ctx.torus:
        return ctx.torus[name]
    entry = ctx.raw_characters.get(name)
    if entry is None:
        raise ValidationError(f"'{where}' refers to undefined character '{name}'")
    if not isinstance(entry, dict):
        raise ConfigError(f"'characters.{name}' must be a table")
    at = f"characters.{name}"
    _check_keys(entry, _CHAR_KEYS, at)
    if "scalar" in entry:
        raise ValidationError(f"'{where}' needs a torus character but '{name}' is a character of F^x")
    if name in ctx._resolving:
        raise ValidationError(f"character '{name}' is defined in terms of itself")
    ctx._resolving.add(name)
    rd, group = ctx.rd, ctx.group
    sources = [k for k in ("coords", "trivial", "base", "compose") if k in entry]
    if len(sources) != 1:
        raise ConfigError(f"'{at}' needs exactly one of coords / trivial / base / compose")
    src = sources[0]
    if src == "coords":
        coords = _get(entry, "coords", at, list)
        lits = [parse_padic(c, group, f"{at}.coords[{i}]") for i, c in enumerate(coords)]
        if _get(entry, "ambient", at, bool, False):
            chi = restrict_ambient(rd, lits)
        else:
            if len(lits) != rd.rank:
                raise ValidationError(f"'{at}.coords' has {len(lits)} entries, the torus has rank {rd.rank}")
            chi = TorusCharacter(group, tuple(lits))
    elif src == "trivial":
        chi = trivial_torus(group, rd.rank)
    elif src == "base":
        chi = resolve_torus(ctx, _get(entry, "base", at, str), f"{at}.base")
    else:
        comp = _get(entry, "compose", at, dict)
        _check_keys(comp, {"scalar", "weight"}, f"{at}.compose")
        eta = resolve_scalar(ctx, _get(comp, "scalar", f"{at}.compose", str), f"{at}.compose.scalar")
        weight = _get(comp, "weight", f"{at}.compose", "intlist")
        if len(weight) != rd.rank:
            raise ValidationError(f"'{at}.compose.weight' must have length {rd.rank}")
        chi = compose_root(eta, weight)
    # reflections apply in the listed order, so no sorting here
    for v in _get(entry, "reflect", at, "intlist", []):
        _roots([v], f"{at}.reflect", rd)
        chi = reflect(rd, v - 1, chi)
    for j, tw in enumerate(_get(entry, "root_twists", at, list, [])):
        w = f"{at}.root_twists[{j}]"
        if not isinstance(tw, dict):
            raise ConfigError(f"'{w}' must be a table")
        r = _roots([_get(tw, "root", w, int)], f"{w}.root", rd)[0]
        rest = {k: v for k, v in tw.items() if k != "root"}
        if "scalar" in rest:
            _check_keys(rest, {"scalar"}, w)
            eta = resolve_scalar(ctx, _get(rest, "scalar", w, str), f"{w}.scalar")
        else:
            eta = parse_padic(rest, group, w)
        chi = chi * compose_root(eta, rd.simple_roots[r])
    for other in _get(entry, "times", at, list, []):
        if not isinstance(other, str):
            raise ConfigError(f"key '{at}.times' must list character names")
        chi = chi * resolve_torus(ctx, other, f"{at}.times")
    chi = chi ** _get(entry, "power", at, int, 1)
    ctx._resolving.discard(name)
    ctx.torus[name] = chi
    return chi


def build_context(cfg: dict) -> Context:
    rd = build_group(cfg)
    group = build_character_group(cfg)
    chars = _get(cfg, "characters", "", dict, {})
    for name, entry in chars.items():
        if not isinstance(entry, dict):
            raise ConfigError(f"'characters.{name}' must be a table")
    return Context(rd, group, chars)


# --- reports -------------------------------------------------------------------


def _char_doc(chi: TorusCharacter) -> list[str]:
    return [str(c) for c in chi.coords]


def _report_doc(rep: ExtReport) -> dict:
    if rep.kind == "exact":
        result = {"status": "exact", "dim": rep.dim}
    elif rep.kind == "interval":
        result = {"status": "interval", "low": rep.low, "high": rep.high}
        if rep.expected is not None:
            result["expected"] = {"status": "expected", "dim": rep.expected}
    else:
        result = {"status": "symbolic", "formula": str(rep.symbolic)}
    result["case"] = rep.case_label
    witnesses = {
        "delta_prime": _one_based(rep.delta_prime),
        "delta_doubleprime": _one_based(rep.delta_doubleprime),
    }
    return {"result": result, "witnesses": witnesses, "hypotheses": dict(rep.hypotheses)}


def _parabolic(q: dict, rd: RootDatum) -> ParabolicData:
    levi = _roots(_get(q, "levi", "query", "intlist", []), "query.levi", rd)
    inner = _roots(_get(q, "inner", "query", "intlist", []), "query.inner", rd)
    return ParabolicData(levi, inner)


_QUERY_KEYS = {
    "roots": set(),
    "weyl": set(),
    "wsigma": {"levi", "inner"},
    "hord": {"levi", "inner", "chi", "degree"},
    "ext-ps": {"chi", "chi_prime"},
    "autoext": {"chi"},
    "ext-ord": {"levi", "inner", "chi", "chi_prime"},
    "irregular": {"chi", "eta", "root"},
}


@dataclass
class Flags:
    override_validity: bool = False
    torus_ext_dim: int | None = None
    max_weyl: int = DEFAULT_MAX_WEYL
    jobs: int = 1


def run_query(cfg: dict, flags: Flags, query_name: str | None = None) -> dict:
    ctx = build_context(cfg)
    rd, group = ctx.rd, ctx.group
    q = _get(cfg, "query", "", dict)
    name = query_name or _get(q, "name", "query", str)
    if name not in QUERIES:
        raise ConfigError(f"key 'query.name' must be one of {list(QUERIES)}, got {name!r}")
    # an overriding --query may leave parameters of the original query behind
    allowed = set().union(*_QUERY_KEYS.values()) if query_name else _QUERY_KEYS[name]
    _check_keys(q, allowed | {"name"}, "query")
    W = weyl_group(rd, flags.max_weyl)

    doc: dict[str, Any] = {
        "query": {"name": name, **{k: q[k] for k in sorted(q) if k in _QUERY_KEYS[name]}},
        "group": {
            "name": rd.name,
            "rank": rd.rank,
            "simple_roots": [list(a) for a in rd.simple_roots],
            "simple_coroots": [list(c) for c in rd.simple_coroots],
        },
        "field": {"p": group.field.p, "degree": group.field.degree, "residue_card": group.field.q},
        "coefficients": {"mode": group.mode.value, "value_order": group.value_order},
    }
    validity = {"proved": True, "override": flags.override_validity}

    if name == "roots":
        rs = rd.root_system
        doc["result"] = {
            "status": "exact",
            "positive_roots": [list(b) for b in rs.positive],
            "coefficients": [list(c) for c in rs.coefficients],
            "dim_N": len(rs.positive),
            "cartan_matrix": [list(r) for r in rd.cartan_matrix()],
            "center_component_group": list(center_component_group(rd)),
            "rank_one_types": [classify_rank_one(rd, i).value for i in range(rd.semisimple_rank)],
        }
    elif name == "weyl":
        profile: dict[int, int] = {}
        for w in W:
            profile[w.length] = profile.get(w.length, 0) + 1
        doc["result"] = {
            "status": "exact",
            "order": len(W),
            "length_profile": [profile[k] for k in sorted(profile)],
            "longest_element": W.longest.label(),
            "longest_length": W.longest.length,
            "elements": [w.label() for w in W] if len(W) <= 1000 else None,
        }
    elif name == "wsigma":
        pd = _parabolic(q, rd).check(rd)
        sig = w_sigma(rd, pd, flags.max_weyl)
        doc["result"] = {
            "status": "exact",
            "sigma": str(SpecialRepLabel(pd)),
            "w_BQ": [w.label() for w in w_BQ(rd, pd, flags.max_weyl)],
            "w_sigma": [
                {"w": w.label(), "length": w.length, "alpha_w": list(alpha_w(rd, w)), "dim_N_w": n_w_dimension(rd, w)}
                for w in sig
            ],
            "count": len(sig),
        }
    elif name == "hord":
        pd = _parabolic(q, rd).check(rd)
        chi = resolve_torus(ctx, _get(q, "chi", "query", str), "query.chi")
        n = _get(q, "degree", "query", int)
        rep = OrdinaryRepDescriptor(rd, pd, chi)
        piece = hord(rep, n, override_validity=flags.override_validity, jobs=flags.jobs)
        validity["proved"] = piece.proved
        doc["result"] = {
            "status": "exact",
            "sigma": str(rep.sigma),
            "degree": n,
            "count": len(piece),
            "characters": [
                {"witness": w.label(), "character": _char_doc(c)}
                for w, c in zip(piece.witnesses, piece.characters)
            ],
        }
        r = n // group.field.degree if n % group.field.degree == 0 else None
        if r is not None and r <= len(rd.root_system.positive):
            doc["result"]["bruhat_graded"] = [
                {"w": w.label(), "dim_N_w": d} for w, d in bruhat_graded(rep, r)
            ]
    elif name in ("ext-ps", "autoext", "ext-ord"):
        chi = resolve_torus(ctx, _get(q, "chi", "query", str), "query.chi")
        if name == "autoext":
            rep = autoext_modp(rd, chi)
        else:
            chi_p = resolve_torus(ctx, _get(q, "chi_prime", "query", str), "query.chi_prime")
            if name == "ext-ps":
                rep = dim_ext1_principal_series(rd, chi_p, chi, flags.torus_ext_dim)
            else:
                ordinary = OrdinaryRepDescriptor(rd, _parabolic(q, rd).check(rd), chi)
                rep = ext_ordinary(rd, chi_p, ordinary, flags.torus_ext_dim)
        doc.update(_report_doc(rep))
    else:
        chi = resolve_torus(ctx, _get(q, "chi", "query", str), "query.chi")
        eta_name = _get(q, "eta", "query", str, None)
        eta = resolve_scalar(ctx, eta_name, "query.eta") if eta_name else trivial(group)
        i = _roots([_get(q, "root", "query", int)], "query.root", rd)[0]
        rec = classify_irregular(rd, chi, eta, i)
        doc["result"] = {
            "status": "exact",
            "twist_fixed": rec.twist_fixed,
            "pullback_equal": rec.pullback_equal,
            "exceptional": rec.exceptional,
            "rank_one_type": classify_rank_one(rd, i).value,
        }
    doc["validity"] = validity
    return doc


def render(doc: dict, fmt: str) -> str:
    if fmt == "machine":
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    return yaml.safe_dump(doc, sort_keys=False, allow_unicode=True, default_flow_style=None, width=100)


def load_config(path: str) -> dict:
    try:
        with open(path, "rb") as fh:
            return tomli.load(fh)
    except tomli.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ordext", description=__doc__.splitlines()[0])
    ap.add_argument("--config", required=True, metavar="PATH")
    ap.add_argument("--query", choices=QUERIES, help="override query.name from the config")
    ap.add_argument("--format", choices=("human", "machine"), default="human")
    ap.add_argument("--override-validity", action="store_true")
    ap.add_argument("--torus-ext-dim", type=int, metavar="N")
    ap.add_argument("--max-weyl", type=int, default=DEFAULT_MAX_WEYL, metavar="N")
    ap.add_argument("--jobs", type=int, default=1, metavar="N")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    flags = Flags(args.override_validity, args.torus_ext_dim, args.max_weyl, max(1, args.jobs))
    try:
        cfg = load_config(args.config)
        doc = run_query(cfg, flags, args.query)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConfigError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except ValidityDomain as exc:
        print(f"validity error: {exc} (pass --override-validity to evaluate anyway)", file=sys.stderr)
        return 3
    except OrdextError as exc:
        print(f"validation error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(doc, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
