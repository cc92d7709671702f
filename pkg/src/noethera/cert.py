"""Certificate documents and their standalone verifier.

Two kinds of document are stored as JSON text: a *run* (an input stream, the
bounds the witness produced, and the final good combination if one was found)
and a *collapse* (a monomial relation from :mod:`noethera.krull`).  Ordinals,
rings and elements are embedded as their canonical grammar strings.

Every document carries a sha256 digest of its canonical content.  Semantic
checks catch tampering with anything that enters a combination identity, but
some fields (a bound that still descends, an element whose coefficient is
zero) can only be protected by the digest, since recomputing them would need
the witness itself.

This module imports only the algebra and ordinal modules and
:mod:`noethera.checks`; nothing here runs a witness.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

from .algebra import ParseError, Ring, format_ring, parse_element, parse_ring
from .checks import CollapseCert, Probe, collapse_failures, verify_good
from .ordinal import Ordinal, OrdinalParseError, format_ordinal, parse_ordinal

__all__ = [
    "VERSION", "CertFormatError", "GoodResult", "RunDocument", "CollapseDocument",
    "Report", "run_document", "collapse_document", "to_collapse_cert", "seal",
    "save", "load", "verify_document", "digest_of",
]

VERSION = 1


class CertFormatError(ValueError):
    """Bytes that do not form a document of a known kind and version."""


@dataclass(frozen=True)
class GoodResult:
    position: int  # index of the element proven to lie in the span of the earlier ones
    comb: Tuple[str, ...]


@dataclass(frozen=True)
class RunDocument:
    ring: str
    initial: str  # bound of the empty list
    stream: Tuple[str, ...]
    trace: Tuple[str, ...]  # Continue bounds, in order
    result: Optional[GoodResult]  # None while pending
    digest: str = ""
    version: int = VERSION
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    kind = "run"

    def body(self) -> dict:
        if self.result is None:
            result = {"status": "pending"}
        else:
            result = {"status": "good", "position": self.result.position, "comb": list(self.result.comb)}
        return {
            "kind": self.kind, "version": self.version, "ring": self.ring, "initial": self.initial,
            "stream": list(self.stream), "trace": list(self.trace), "result": result,
        }


@dataclass(frozen=True)
class CollapseDocument:
    ring: str
    elements: Tuple[str, ...]
    probes: Tuple[Tuple[str, Tuple[int, ...], str], ...]  # (index, exponents, monomial)
    comb: Tuple[str, ...]
    digest: str = ""
    version: int = VERSION
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    kind = "collapse"

    def body(self) -> dict:
        return {
            "kind": self.kind, "version": self.version, "ring": self.ring,
            "elements": list(self.elements),
            "probes": [{"index": i, "exponents": list(e), "monomial": m} for i, e, m in self.probes],
            "comb": list(self.comb),
        }


def digest_of(doc) -> str:
    text = json.dumps(doc.body(), separators=(",", ":"), ensure_ascii=True)
    return "sha256:" + hashlib.sha256(text.encode("ascii")).hexdigest()


def seal(doc):
    """Copy of ``doc`` with its digest set from its current content."""
    return replace(doc, digest=digest_of(doc))


# -- building documents from engine objects -------------------------------


def run_document(ring: Ring, initial, stream, trace, good=None) -> RunDocument:
    """``good`` is ``(position, comb)`` or None for a pending run."""
    result = None
    if good is not None:
        pos, comb = good
        result = GoodResult(pos, tuple(ring.format(c) for c in comb))
    return seal(RunDocument(
        format_ring(ring), format_ordinal(initial), tuple(ring.format(x) for x in stream),
        tuple(format_ordinal(b) for b in trace), result,
    ))


def collapse_document(cert: CollapseCert) -> CollapseDocument:
    R = cert.ring
    return seal(CollapseDocument(
        format_ring(R), tuple(R.format(x) for x in cert.elements),
        tuple((format_ordinal(p.index), tuple(p.exponents), R.format(p.value)) for p in cert.probes),
        tuple(R.format(c) for c in cert.comb),
    ))


def to_collapse_cert(doc: CollapseDocument) -> CollapseCert:
    """Parse a collapse document; raises ParseError/OrdinalParseError on bad text."""
    R = parse_ring(doc.ring)
    return CollapseCert(
        R, tuple(parse_element(t, R) for t in doc.elements),
        tuple(Probe(parse_ordinal(i), tuple(e), parse_element(m, R)) for i, e, m in doc.probes),
        tuple(parse_element(t, R) for t in doc.comb),
    )


# -- serialisation --------------------------------------------------------


def save(doc) -> bytes:
    """Deterministic text form: fixed key order, two-space indent, ASCII, final newline."""
    body = doc.body()
    body["digest"] = doc.digest
    return (json.dumps(body, indent=2, ensure_ascii=True) + "\n").encode("ascii")


def _expect(obj, key, typ, where="document"):
    if key not in obj:
        raise CertFormatError(f"{where}: missing field {key!r}")
    val = obj[key]
    if typ is int:
        ok = isinstance(val, int) and not isinstance(val, bool)
    else:
        ok = isinstance(val, typ)
    if not ok:
        raise CertFormatError(f"{where}: field {key!r} must be {typ.__name__}")
    return val


def _strings(obj, key, where="document") -> Tuple[str, ...]:
    vals = _expect(obj, key, list, where)
    if not all(isinstance(v, str) for v in vals):
        raise CertFormatError(f"{where}: field {key!r} must be a list of strings")
    return tuple(vals)


def _exact_keys(obj, keys, where):
    extra = set(obj) - set(keys)
    if extra:
        raise CertFormatError(f"{where}: unknown field(s) {sorted(extra)}")


class _Canon:
    """Re-canonicalises grammar strings, noting every one that changed."""

    def __init__(self):
        self.warnings: List[str] = []
        self.ring: Optional[Ring] = None

    def _note(self, where, old, new):
        if old != new:
            self.warnings.append(f"{where}: non-canonical text {old!r} rewritten as {new!r}")
        return new

    def ring_text(self, text):
        try:
            self.ring = parse_ring(text)
        except ParseError as exc:
            raise CertFormatError(f"ring: {exc}") from None
        return self._note("ring", text, format_ring(self.ring))

    def element(self, text, where):
        try:
            x = parse_element(text, self.ring)
        except ParseError as exc:
            raise CertFormatError(f"{where}: {exc}") from None
        return self._note(where, text, self.ring.format(x))

    def ordinal(self, text, where):
        try:
            o = parse_ordinal(text)
        except OrdinalParseError as exc:
            raise CertFormatError(f"{where}: {exc}") from None
        return self._note(where, text, format_ordinal(o))


def load(data: bytes):
    """Parse a saved document.  Non-canonical texts are rewritten and flagged
    in ``warnings``; anything else unexpected raises :class:`CertFormatError`."""
    try:
        obj = json.loads(data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CertFormatError(f"malformed input: {exc}") from None
    if not isinstance(obj, dict):
        raise CertFormatError("malformed input: top level is not an object")
    kind = _expect(obj, "kind", str)
    version = _expect(obj, "version", int)
    if version != VERSION:
        raise CertFormatError(f"version mismatch: document has {version}, expected {VERSION}")
    digest = _expect(obj, "digest", str)
    c = _Canon()
    ring = c.ring_text(_expect(obj, "ring", str))
    if kind == "run":
        _exact_keys(obj, ("kind", "version", "ring", "initial", "stream", "trace", "result", "digest"), "run")
        initial = c.ordinal(_expect(obj, "initial", str), "initial")
        stream = tuple(c.element(t, f"stream[{i}]") for i, t in enumerate(_strings(obj, "stream")))
        trace = tuple(c.ordinal(t, f"trace[{i}]") for i, t in enumerate(_strings(obj, "trace")))
        res = _expect(obj, "result", dict)
        status = _expect(res, "status", str, "result")
        if status == "pending":
            _exact_keys(res, ("status",), "result")
            result = None
        elif status == "good":
            _exact_keys(res, ("status", "position", "comb"), "result")
            pos = _expect(res, "position", int, "result")
            comb = tuple(c.element(t, f"result.comb[{i}]") for i, t in enumerate(_strings(res, "comb", "result")))
            result = GoodResult(pos, comb)
        else:
            raise CertFormatError(f"result: unknown status {status!r}")
        return RunDocument(ring, initial, stream, trace, result, digest, version, tuple(c.warnings))
    if kind == "collapse":
        _exact_keys(obj, ("kind", "version", "ring", "elements", "probes", "comb", "digest"), "collapse")
        elements = tuple(c.element(t, f"elements[{i}]") for i, t in enumerate(_strings(obj, "elements")))
        probes = []
        for i, p in enumerate(_expect(obj, "probes", list)):
            where = f"probes[{i}]"
            if not isinstance(p, dict):
                raise CertFormatError(f"{where}: not an object")
            _exact_keys(p, ("index", "exponents", "monomial"), where)
            exps = _expect(p, "exponents", list, where)
            if not all(isinstance(e, int) and not isinstance(e, bool) for e in exps):
                raise CertFormatError(f"{where}: exponents must be integers")
            probes.append((c.ordinal(_expect(p, "index", str, where), where + ".index"), tuple(exps),
                           c.element(_expect(p, "monomial", str, where), where + ".monomial")))
        comb = tuple(c.element(t, f"comb[{i}]") for i, t in enumerate(_strings(obj, "comb")))
        return CollapseDocument(ring, elements, tuple(probes), comb, digest, version, tuple(c.warnings))
    raise CertFormatError(f"unknown document kind {kind!r}")


# -- verification ---------------------------------------------------------


@dataclass(frozen=True)
class Report:
    failures: Tuple[str, ...]
    warnings: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def _run_failures(doc: RunDocument) -> List[str]:
    R = parse_ring(doc.ring)
    stream = [parse_element(t, R) for t in doc.stream]
    initial = parse_ordinal(doc.initial)
    trace = [parse_ordinal(t) for t in doc.trace]
    out = []
    prev = initial
    for i, b in enumerate(trace):
        if not isinstance(b, Ordinal):
            out.append(f"descent: trace[{i}] = {format_ordinal(b)} is not an ordinal bound")
        elif not b < prev:
            out.append(f"descent: trace[{i}] = {format_ordinal(b)} is not below {format_ordinal(prev)}")
        prev = b
    if doc.result is None:
        if len(stream) != len(trace):
            out.append(f"shape: pending run has {len(stream)} elements but {len(trace)} bounds")
        return out
    pos = doc.result.position
    if pos != len(trace) or len(stream) != len(trace) + 1:
        out.append(f"shape: good position {pos} with {len(stream)} elements and {len(trace)} bounds")
        return out
    comb = [parse_element(t, R) for t in doc.result.comb]
    if len(comb) > pos:
        out.append(f"combination identity: {len(comb)} coefficients for {pos} earlier elements")
    elif not verify_good(R, stream, comb):
        out.append(f"combination identity: comb over stream[0:{pos}] does not equal stream[{pos}]")
    return out


def _collapse_failures(doc: CollapseDocument) -> List[str]:
    return collapse_failures(to_collapse_cert(doc))


def verify_document(doc) -> Report:
    """Re-parse every text and recheck every obligation; never raises."""
    try:
        if isinstance(doc, RunDocument):
            failures = _run_failures(doc)
        elif isinstance(doc, CollapseDocument):
            failures = _collapse_failures(doc)
        else:
            return Report((f"unknown document type {type(doc).__name__}",))
    except (ParseError, OrdinalParseError) as exc:
        failures = [f"parse: {exc}"]
    except Exception as exc:  # a verifier reports, it does not crash
        failures = [f"internal: {type(exc).__name__}: {exc}"]
    if doc.version != VERSION:
        failures.append(f"version: {doc.version} is not {VERSION}")
    if doc.digest != digest_of(doc):
        failures.append("digest: stored digest does not match the document content")
    return Report(tuple(failures), tuple(doc.warnings))
