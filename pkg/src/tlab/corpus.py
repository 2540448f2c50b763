"""Corpus enumeration and the parallel verification sweep runner.

A sweep maps one check over a corpus (exhaustive labeled enumeration, a
graph6 file, or a single generated graph) and writes one JSON record per
unit.  Results are re-sequenced by input index before writing, so the report
bytes are identical no matter how many worker processes run, and a sidecar
checkpoint makes an interrupted sweep resumable with byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import os
import sys
from fractions import Fraction

from . import records
from .bounds import caro_wei, inverse_degree_weights, lp_max_weight, verify_sigma_theorem
from .conjecture import COUNTEREXAMPLE as CONJ_CE
from .conjecture import conjecture_verdict, write_counterexample_certificate
from .graphs import Graph, encode_graph6, generate, parse_graph6
from .independence import alpha_exact
from .inequalities import (
    verify_appendixA_grid,
    verify_bucket_oracle_grid,
    verify_claims_grid,
    verify_finishing_blow_grid,
)
from .records import VerificationRecord, fmt_rational
from .stability import verify_corollary, verify_stability_theorem

ENUMERATION_MAX_N = 7
JOBS_ENV = "TLAB_JOBS"

GRAPH_SUITES = ("thm-main-lp", "thm-sigma", "stability", "corollary", "conjecture")
INEQ_SUITES = ("ineq-claims", "ineq-lemma52", "ineq-finishing-blow", "ineq-appendix-a")


class IngestionError(ValueError):
    """Unusable corpus or parameters; maps to exit status 2."""


class SweepInterrupted(RuntimeError):
    """Raised by the testing hook that simulates a mid-sweep crash."""


_PAIR_TABLE: dict[int, list[tuple[int, int]]] = {}


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """The fixed edge-bit order: pairs (u, v), u < v, lexicographic."""
    if n not in _PAIR_TABLE:
        _PAIR_TABLE[n] = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return _PAIR_TABLE[n]


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = edge_pairs(n)
    rows = [0] * n
    m = mask
    while m:
        low = m & -m
        u, v = pairs[low.bit_length() - 1]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        m ^= low
    return Graph(n, tuple(rows))


def enumerate_labeled_graphs(n: int):
    """Every labeled simple graph on n vertices, edge-mask counting order."""
    if not 0 <= n <= ENUMERATION_MAX_N:
        raise IngestionError(
            f"exhaustive enumeration is capped at n = {ENUMERATION_MAX_N} "
            f"(2^21 graphs); ingest a graph6 corpus for larger n"
        )
    for mask in range(1 << (n * (n - 1) // 2)):
        yield graph_from_mask(n, mask)


# ---------------------------------------------------------------------------
# per-graph checks, one per suite

def check_main_lp(g: Graph, params: dict) -> VerificationRecord:
    g6 = encode_graph6(g)
    lpb = lp_max_weight(g, clique_cap=int(params.get("clique_cap", 4096)))
    cw = caro_wei(g)
    a = alpha_exact(g).alpha
    payload = {"lp": fmt_rational(lpb.value), "caro_wei": fmt_rational(cw), "alpha": a}
    if lpb.value > a:
        payload["violated"] = "lp<=alpha"
        return VerificationRecord(g6, "thm-main-lp", {}, records.COUNTEREXAMPLE, payload)
    if lpb.value < cw:
        payload["violated"] = "lp>=caro_wei"
        return VerificationRecord(g6, "thm-main-lp", {}, records.COUNTEREXAMPLE, payload)
    return VerificationRecord(g6, "thm-main-lp", {}, records.OK, payload)


def check_sigma(g: Graph, params: dict) -> VerificationRecord:
    return verify_sigma_theorem(g, Fraction(params.get("sigma", Fraction(1, 2))))


def check_stability(g: Graph, params: dict) -> VerificationRecord:
    return verify_stability_theorem(g, int(params.get("r", 2)),
                                    Fraction(params.get("sigma", Fraction(1, 2))))


def check_corollary(g: Graph, params: dict) -> VerificationRecord:
    return verify_corollary(g, int(params.get("r", 2)))


def check_conjecture(g: Graph, params: dict) -> VerificationRecord:
    g6 = encode_graph6(g)
    cap = int(params.get("blowup_cap", 14))
    if any(not row for row in g.adj):
        return VerificationRecord(g6, "conjecture", {}, records.HYPOTHESIS_FAIL,
                                  {"reason": "isolated vertex, 1/d undefined"})
    if "weights" in params:
        weights = tuple(Fraction(w) for w in params["weights"])
    else:
        weights = inverse_degree_weights(g)
    verdict = conjecture_verdict(g, weights, max_n=cap)
    payload = {"kind": verdict.kind, "alpha": verdict.alpha,
               "weight_sum": fmt_rational(verdict.weight_sum)}
    if verdict.clique is not None:
        payload["clique"] = list(verdict.clique)
        payload["clique_weight"] = fmt_rational(verdict.clique_weight)
    if verdict.blowup is not None:
        payload["k"] = verdict.blowup.k
        payload["parts"] = [list(p) for p in verdict.blowup.parts]
        payload["blowup_weight"] = fmt_rational(verdict.blowup.weight)
    if verdict.kind == CONJ_CE:
        payload["exhaustion"] = verdict.exhaustion
        payload["certificate"] = write_counterexample_certificate(
            verdict, weights, str(params.get("certificate_dir", ".")))
        return VerificationRecord(g6, "conjecture", {}, records.COUNTEREXAMPLE, payload)
    return VerificationRecord(g6, "conjecture", {}, records.OK, payload)


GRAPH_CHECKS = {
    "thm-main-lp": check_main_lp,
    "thm-sigma": check_sigma,
    "stability": check_stability,
    "corollary": check_corollary,
    "conjecture": check_conjecture,
}


def run_ineq_suite(suite: str, params: dict) -> VerificationRecord:
    if suite == "ineq-claims":
        report = verify_claims_grid(int(params.get("delta_max", 60)),
                                    Fraction(params.get("step", Fraction(1, 4))))
    elif suite == "ineq-lemma52":
        report = verify_bucket_oracle_grid(int(params.get("delta_max", 12)),
                                           int(params.get("budget", 14)))
    elif suite == "ineq-finishing-blow":
        report = verify_finishing_blow_grid(int(params.get("delta_max", 15)),
                                            int(params.get("budget", 18)))
    elif suite == "ineq-appendix-a":
        report = verify_appendixA_grid(int(params.get("n_max", 200)),
                                       int(params.get("r_max", 20)))
    else:
        raise IngestionError(f"unknown inequality suite {suite!r}")
    verdict = records.OK if report.ok else records.COUNTEREXAMPLE
    shown = {k: (fmt_rational(v) if isinstance(v, Fraction) else v) for k, v in params.items()}
    return VerificationRecord("-", suite, shown, verdict, report.to_json())


# ---------------------------------------------------------------------------
# worker plumbing

_W_SUITE: str | None = None
_W_PARAMS: dict = {}
_W_N: int | None = None


def _init_worker(suite: str, params: dict, n: int | None):
    global _W_SUITE, _W_PARAMS, _W_N
    _W_SUITE = suite
    _W_PARAMS = params
    _W_N = n


def _work_unit(unit) -> str:
    if _W_N is not None:
        g = graph_from_mask(_W_N, unit)
        g6 = encode_graph6(g)
    else:
        g6 = unit
        g = parse_graph6(unit)
    try:
        rec = GRAPH_CHECKS[_W_SUITE](g, _W_PARAMS)
    except Exception as exc:  # cap exceedances and kin become ERROR records
        rec = VerificationRecord(g6, _W_SUITE, {}, records.ERROR,
                                 {"message": f"{type(exc).__name__}: {exc}"})
    return rec.to_json_line()


def resolve_jobs(jobs: int | None) -> int:
    if jobs is not None:
        return max(1, int(jobs))
    env = os.environ.get(JOBS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# ---------------------------------------------------------------------------
# sources

def _load_source(source):
    """Returns (key, n_or_None, units): units are masks for enumeration or
    validated graph6 lines otherwise."""
    kind = source[0]
    if kind == "enumerate":
        n = int(source[1])
        if not 0 <= n <= ENUMERATION_MAX_N:
            raise IngestionError(
                f"exhaustive enumeration is capped at n = {ENUMERATION_MAX_N}; "
                f"ingest a graph6 corpus for larger n")
        return f"enumerate:{n}", n, range(1 << (n * (n - 1) // 2))
    if kind == "file":
        path = source[1]
        try:
            with open(path, "r", encoding="ascii") as fh:
                raw = fh.read()
        except OSError as exc:
            raise IngestionError(f"cannot read corpus {path}: {exc}") from exc
        lines = [ln for ln in raw.splitlines() if ln.strip()]
        for i, ln in enumerate(lines, start=1):
            try:
                parse_graph6(ln)
            except ValueError as exc:
                raise IngestionError(f"{path}: line {i}: {exc}") from exc
        return f"file:{path}", None, lines
    if kind == "lines":
        lines = [ln for ln in source[1] if ln.strip()]
        for i, ln in enumerate(lines, start=1):
            try:
                parse_graph6(ln)
            except ValueError as exc:
                raise IngestionError(f"line {i}: {exc}") from exc
        return "lines:" + hashlib.sha256("\n".join(lines).encode()).hexdigest()[:16], None, lines
    if kind == "generate":
        g = generate(source[1], *source[2:])
        line = encode_graph6(g)
        return f"generate:{source[1]}:{','.join(map(str, source[2:]))}", None, [line]
    raise IngestionError(f"unknown source kind {kind!r}")


def _unit_key(unit) -> bytes:
    return (str(unit) + "\n").encode("ascii")


# ---------------------------------------------------------------------------
# the runner

def run_suite(suite: str, source=None, params: dict | None = None,
              jobs: int | None = None, out=None, checkpoint: str | None = None,
              checkpoint_every: int = 1000, interrupt_after: int | None = None) -> int:
    """Run one suite over one corpus; returns the exit status.

    0: every record OK or HYPOTHESIS_FAIL.  1: at least one COUNTEREXAMPLE
    (or ERROR) record.  2: the corpus or parameters were unusable.  Records
    go to ``out`` (path or open file, stdout by default) as JSON lines in a
    deterministic order independent of ``jobs``, followed by one summary
    line.  ``interrupt_after`` is a testing hook that aborts the sweep by
    raising SweepInterrupted after that many records.
    """
    params = dict(params or {})
    try:
        return _run_suite_inner(suite, source, params, jobs, out, checkpoint,
                                checkpoint_every, interrupt_after)
    except IngestionError as exc:
        print(f"tlab: {exc}", file=sys.stderr)
        return 2


def _open_out(out, resuming: bool = False):
    if out is None:
        return sys.stdout, False
    if isinstance(out, (str, os.PathLike)):
        return open(out, "a" if resuming else "w", encoding="ascii"), True
    return out, False


def _truncate_lines(path: str, keep: int):
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.readlines()
    with open(path, "w", encoding="ascii") as fh:
        fh.writelines(lines[:keep])


def _write_checkpoint(path: str, payload: dict):
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        json.dump(payload, fh, sort_keys=True)
    os.replace(tmp, path)


def _run_suite_inner(suite, source, params, jobs, out, checkpoint,
                     checkpoint_every, interrupt_after) -> int:
    if suite in INEQ_SUITES:
        rec = run_ineq_suite(suite, params)
        stream, owns = _open_out(out)
        try:
            stream.write(rec.to_json_line() + "\n")
            stream.write(json.dumps({"summary": {"total": 1, rec.verdict: 1}},
                                    sort_keys=True, separators=(",", ":")) + "\n")
        finally:
            if owns:
                stream.close()
        return 0 if rec.verdict == records.OK else 1

    if suite not in GRAPH_SUITES:
        raise IngestionError(f"unknown suite {suite!r}; "
                             f"graph suites: {GRAPH_SUITES}, inequality suites: {INEQ_SUITES}")
    if source is None:
        raise IngestionError("graph suites need a corpus source")
    key, n, units = _load_source(source)
    total_units = len(units)

    start = 0
    counts: dict[str, int] = {}
    hasher = hashlib.sha256()
    resuming = False
    if checkpoint and not isinstance(out, (str, os.PathLike)):
        raise IngestionError("checkpointing needs a file path for --out")
    if checkpoint and os.path.exists(checkpoint):
        resuming = True
        with open(checkpoint, "r", encoding="ascii") as fh:
            state = json.load(fh)
        if state.get("source") != key:
            raise IngestionError(
                f"checkpoint {checkpoint} was written for source {state.get('source')!r}, "
                f"not {key!r}")
        start = int(state["offset"])
        if start > total_units:
            raise IngestionError(f"checkpoint offset {start} exceeds corpus size {total_units}")
        for unit in units[:start]:
            hasher.update(_unit_key(unit))
        if hasher.hexdigest() != state["prefix_sha256"]:
            raise IngestionError("checkpoint prefix hash does not match the corpus")
        counts = {k: int(v) for k, v in state["counts"].items()}
        if out is not None and os.path.exists(out):
            _truncate_lines(os.fspath(out), int(state["records"]))
        elif int(state["records"]) > 0:
            raise IngestionError("checkpoint present but the output file is missing")

    stream, owns = _open_out(out, resuming)
    written = sum(counts.values())
    exit_code = 0
    try:
        def handle(line: str):
            nonlocal written
            verdict = json.loads(line)["verdict"]
            counts[verdict] = counts.get(verdict, 0) + 1
            stream.write(line + "\n")
            written += 1

        pending = units[start:]
        jobs_n = resolve_jobs(jobs)
        processed = start
        flush_mark = processed

        def checkpoint_now():
            if not checkpoint:
                return
            stream.flush()
            _write_checkpoint(checkpoint, {
                "source": key, "offset": processed, "records": written,
                "prefix_sha256": hasher.hexdigest(), "counts": counts,
            })

        def consume(results):
            nonlocal processed, flush_mark
            for unit, line in zip(pending, results):
                handle(line)
                hasher.update(_unit_key(unit))
                processed += 1
                if checkpoint and processed - flush_mark >= checkpoint_every:
                    checkpoint_now()
                    flush_mark = processed
                if interrupt_after is not None and written >= interrupt_after:
                    # simulate a crash: die without flushing a fresh checkpoint
                    raise SweepInterrupted(f"testing hook tripped after {written} records")

        if jobs_n <= 1 or total_units - start <= 1:
            _init_worker(suite, params, n)
            consume(map(_work_unit, pending))
        else:
            chunk = max(16, min(4096, (total_units - start) // (jobs_n * 8) or 16))
            with multiprocessing.Pool(jobs_n, initializer=_init_worker,
                                      initargs=(suite, params, n)) as pool:
                consume(pool.imap(_work_unit, pending, chunksize=chunk))

        bad = counts.get(records.COUNTEREXAMPLE, 0) + counts.get(records.ERROR, 0)
        exit_code = 1 if bad else 0
        summary = {"summary": dict(sorted({"total": written, **counts}.items()))}
        stream.write(json.dumps(summary, sort_keys=True, separators=(",", ":")) + "\n")
        checkpoint_now()
    finally:
        if owns:
            stream.close()
    return exit_code
