"""JSON report schema (version 1).

Search reports carry the full outcome including wall time; sweep reports are
deliberately time-free so that identical (query, config) inputs serialize to
byte-identical documents.  The worker count is an execution hint with no
effect on outcomes and is likewise omitted from the config section.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

from .certifier import Certificate, fraction_str
from .criticalgaps import GapReport
from .moduliorders import ModuliCouple
from .polycore import RootSpec
from .sampler import Mixture, MultiplicityBias, SearchConfig, SearchOutcome, Uniform
from .signpatterns import PairCouple
from .sweeps import SweepReport

SCHEMA_VERSION = 1


def _strategy_json(cfg: SearchConfig) -> dict:
    s = cfg.strategy
    if isinstance(s, Uniform):
        return {"kind": "uniform"}
    if isinstance(s, Mixture):
        return {
            "kind": "mixture",
            "narrow_scale": cfg.narrow_scale,
            "narrow_fraction": s.narrow_fraction,
        }
    if isinstance(s, MultiplicityBias):
        return {"kind": "multiplicity", "dup_probability": s.dup_probability}
    raise TypeError(f"unknown strategy {s!r}")


def config_json(cfg: SearchConfig) -> dict:
    return {
        "seed": cfg.seed,
        "n": cfg.n,
        "ell": cfg.ell,
        "strategy": _strategy_json(cfg),
        "tolerance": cfg.tau,
        "digits": cfg.digits,
    }


def couple_json(couple: Union[PairCouple, ModuliCouple]) -> dict:
    if isinstance(couple, PairCouple):
        return {
            "sigma": couple.pattern.word,
            "pos": couple.pair.pos,
            "neg": couple.pair.neg,
        }
    return {
        "sigma": couple.pattern.word,
        "order": couple.order.word,
        "bracket": list(couple.order.bracket),
    }


def _num(v) -> float:
    return float(v)


def roots_json(spec: RootSpec) -> dict:
    return {
        "real": [_num(r) for r in spec.real_roots],
        "complex_pairs": [[_num(re), _num(im)] for re, im in spec.complex_pairs],
    }


def certificate_json(cert: Certificate) -> dict:
    claim = cert.claim
    return {
        "rational_coefficients": [fraction_str(Fraction(c)) for c in cert.coeffs],
        "claim": couple_json(claim) if not isinstance(claim, str) else claim,
        "checks": [{"name": name, "detail": detail} for name, detail in cert.checks],
    }


def gap_report_json(report: GapReport) -> dict:
    return {
        "x": list(report.x),
        "z": list(report.z),
        "xi": list(report.xi),
        "m_p": report.m_p,
        "M_p": report.M_p,
        "m_tilde": report.m_tilde,
        "M_tilde": report.M_tilde,
        "m_prime": report.m_prime,
        "M_prime": report.M_prime,
        "class": report.gap_class,
        "margins": list(report.margins),
    }


def outcome_json(outcome: SearchOutcome) -> dict:
    doc: dict = {
        "status": outcome.status,
        "timing": {"attempts": outcome.attempts, "seconds": outcome.seconds},
    }
    if outcome.found:
        doc["attempt_index"] = outcome.attempt_index
        doc["polynomial"] = {"coefficients": [repr(c) for c in outcome.poly.coeffs]}
        doc["roots"] = roots_json(outcome.spec)
        if outcome.certificate is not None:
            doc["certificate"] = certificate_json(outcome.certificate)
        if outcome.gap is not None:
            doc["gap_report"] = gap_report_json(outcome.gap)
    return doc


def search_report(command: str, cfg: SearchConfig, query: dict,
                  outcome: SearchOutcome) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": config_json(cfg),
        "query": query,
        "outcome": outcome_json(outcome),
    }


def sweep_report_json(command: str, report: SweepReport) -> dict:
    rows = []
    for row in report.rows:
        doc: dict = {
            "couple": couple_json(row.couple),
            "status": row.status,
            "attempts": row.attempts,
        }
        if row.attempt_index is not None:
            doc["attempt_index"] = row.attempt_index
        if row.spec is not None:
            doc["roots"] = roots_json(row.spec)
        if row.certificate is not None:
            doc["certificate"] = certificate_json(row.certificate)
        if row.forced_direction is not None:
            doc["forced_direction"] = row.forced_direction
        if row.derived_from is not None:
            doc["derived_from"] = couple_json(row.derived_from)
        rows.append(doc)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": config_json(report.config),
        "query": report.query,
        "rows": rows,
        "totals": report.totals,
    }
    if report.orbits:
        doc["orbits"] = [list(g) for g in report.orbits]
    return doc


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def write_json(path: Union[str, Path], doc: dict) -> None:
    Path(path).write_text(dump_json(doc))
