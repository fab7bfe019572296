# Copyright 2026 The ireval authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Native IR evaluation measures over TREC qrels and runs.

Measures read naturally in Python: ``nDCG@10``, ``P(rel=2)@5``, ``AP``.

    >>> import ireval
    >>> from ireval import nDCG, P, Judged
    >>> qrels = ireval.read_trec_qrels("qrels.txt")
    >>> run = ireval.read_trec_run("run.txt")
    >>> ireval.calc_aggregate([nDCG@10, P(rel=2)@5, Judged@10], qrels, run)
"""

from . import _core
from ._core import (
    Evaluator as _CoreEvaluator,
    Measure,
    QrelsTable,
    QueryResult,
    RunTable,
    parse_measure,
    parse_measures,
    parse_trec_qrels,
    parse_trec_run,
    qrels_from_entries,
    read_trec_qrels,
    read_trec_run,
    run_from_entries,
)

__version__ = "0.1.0"


class MeasureFamily:
    """A measure name awaiting parameters and/or a cutoff.

    ``P(rel=2)@5`` binds the parameter then the cutoff; a bare family such as
    ``AP`` stands for the measure with all defaults.
    """

    __slots__ = ("_name", "_params")

    def __init__(self, name, params=None):
        self._name = name
        self._params = dict(params or {})

    def __call__(self, **params):
        merged = dict(self._params)
        merged.update(params)
        return MeasureFamily(self._name, merged)

    def __matmul__(self, cutoff):
        return _core.make_measure(self._name, self._params, cutoff)

    def _measure(self):
        return _core.make_measure(self._name, self._params, None)

    def __str__(self):
        return str(self._measure())

    __repr__ = __str__

    def __eq__(self, other):
        if isinstance(other, (MeasureFamily, Measure)):
            return str(self) == str(other)
        return NotImplemented

    def __hash__(self):
        return hash(str(self._measure()))


def as_measure(measure):
    """Coerces a Measure, MeasureFamily or expression string to a Measure."""
    if isinstance(measure, Measure):
        return measure
    if isinstance(measure, MeasureFamily):
        return measure._measure()
    if isinstance(measure, str):
        return parse_measure(measure)
    raise TypeError(f"not a measure: {measure!r}")


def _as_qrels(qrels):
    if isinstance(qrels, QrelsTable):
        return qrels
    if isinstance(qrels, dict):
        entries = [
            (qid, doc_id, grade)
            for qid, docs in qrels.items()
            for doc_id, grade in docs.items()
        ]
        return qrels_from_entries(entries)
    return qrels_from_entries(list(qrels))


def _as_run(run):
    if isinstance(run, RunTable):
        return run
    if isinstance(run, dict):
        entries = [
            (qid, doc_id, float(score))
            for qid, docs in run.items()
            for doc_id, score in docs.items()
        ]
        return run_from_entries(entries)
    return run_from_entries(list(run))


def _as_measures(measures):
    if isinstance(measures, str):
        return parse_measures(measures)
    if isinstance(measures, (Measure, MeasureFamily)):
        measures = [measures]
    return [as_measure(m) for m in measures]


def calc_aggregate(measures, qrels, run, intersect=False, backend=""):
    """One aggregate value per measure, as a dict keyed by Measure."""
    return _core.calc_aggregate(
        _as_measures(measures), _as_qrels(qrels), _as_run(run),
        intersect=intersect, backend=backend)


def iter_calc(measures, qrels, run, intersect=False, backend=""):
    """Per-query results as a list of QueryResult rows."""
    return _core.iter_calc(
        _as_measures(measures), _as_qrels(qrels), _as_run(run),
        intersect=intersect, backend=backend)


def evaluator(measures, qrels, intersect=False, backend="", threads=1):
    """A reusable evaluator over frozen qrels for scoring several runs."""
    return _CoreEvaluator(
        _as_measures(measures), _as_qrels(qrels),
        intersect=intersect, backend=backend, threads=threads)


Evaluator = _CoreEvaluator

# One family per catalogued measure, plus the usual aliases.
_FAMILIES = {name: MeasureFamily(name) for name in _core.measure_names()}
_FAMILIES.update(
    MAP=MeasureFamily("AP"),
    NDCG=MeasureFamily("nDCG"),
    MRR=MeasureFamily("RR"),
)
globals().update(_FAMILIES)

__all__ = [
    "Evaluator",
    "Measure",
    "MeasureFamily",
    "QrelsTable",
    "QueryResult",
    "RunTable",
    "as_measure",
    "calc_aggregate",
    "evaluator",
    "iter_calc",
    "parse_measure",
    "parse_measures",
    "parse_trec_qrels",
    "parse_trec_run",
    "qrels_from_entries",
    "read_trec_qrels",
    "read_trec_run",
    "run_from_entries",
] + sorted(_FAMILIES)
