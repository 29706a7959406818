#! /usr/bin/env python

"""
SurfaceData -- document formats for triangulations, degree maps, curves
and reports

All documents are JSON objects with exactly the fields below; unknown
fields are rejected.

surface (.tri):  {"edges": [{"id": int, "kind": "arc"|"boundary"}, ...],
                  "triangles": [{"id": int, "sides": [e0, e1, e2]}, ...],
                  "punctured": bool (optional)}
degree (.deg):   {"degrees": [{"arrow": int, "degree": int}, ...]}
curve (.crv):    {"steps": [{"triangle": int, "entry": 0..2, "exit": 0..2}, ...]}
report:          any object written by the command line with --format machine
"""

import json
import logging
import os

from gentle_analysis.misctools.utils import SurfaceError
from gentle_analysis.triangulation.surface import TriangulatedSurface, CrossingWord
from gentle_analysis.triangulation.grading import DegreeMap

_default_log = logging.getLogger('gentle_analysis.data')

SURFACE_FIELDS = ({"edges", "triangles"}, {"punctured"})
EDGE_FIELDS = {"id", "kind"}
TRIANGLE_FIELDS = {"id", "sides"}
DEGREE_FIELDS = {"arrow", "degree"}
STEP_FIELDS = {"triangle", "entry", "exit"}

FILE_NAMES = {'surface': 'surface.tri', 'cut': 'cut.deg',
              'a': 'a.crv', 'b': 'b.crv', 'c': 'c.crv'}


# utility routines for documents

def _load(text):
    try:
        doc = json.loads(text)
    except ValueError as err:
        raise SurfaceError("malformed document: {0}".format(err))
    if not isinstance(doc, dict):
        raise SurfaceError("malformed document: top level must be an object")
    return doc


def _fields(record, required, optional=frozenset(), what="record"):
    if not isinstance(record, dict):
        raise SurfaceError("malformed document: {0} must be an object".format(what))
    keys = set(record)
    if not set(required) <= keys:
        raise SurfaceError("malformed document: {0} lacks {1}".format(
            what, ', '.join(sorted(set(required) - keys))))
    unknown = keys - set(required) - set(optional)
    if unknown:
        raise SurfaceError("malformed document: unknown field {0} in {1}".format(
            ', '.join(sorted(unknown)), what))
    return record


def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise SurfaceError("malformed document: {0} must be an integer, got {1!r}".format(what, value))
    return value


def _list(value, what):
    if not isinstance(value, list):
        raise SurfaceError("malformed document: {0} must be a list".format(what))
    return value


def _dump(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_surface(text, log=_default_log):
    doc = _fields(_load(text), *SURFACE_FIELDS, what="surface")
    edges = []
    for rec in _list(doc["edges"], "edges"):
        _fields(rec, EDGE_FIELDS, what="edge")
        edges.append((_int(rec["id"], "edge id"), rec["kind"]))
    triangles = []
    for rec in _list(doc["triangles"], "triangles"):
        _fields(rec, TRIANGLE_FIELDS, what="triangle")
        sides = _list(rec["sides"], "sides")
        triangles.append((_int(rec["id"], "triangle id"), [_int(s, "side") for s in sides]))
    punctured = doc.get("punctured", False)
    if not isinstance(punctured, bool):
        raise SurfaceError("malformed document: punctured must be true or false")
    return TriangulatedSurface(edges, triangles, punctured=punctured, log=log)


def dump_surface(surface):
    doc = {"edges": [{"id": e.id, "kind": e.kind} for e in surface.edges],
           "triangles": [{"id": t.id, "sides": list(t.sides)} for t in surface.triangles]}
    if surface.punctured:
        doc["punctured"] = True
    return _dump(doc)


def parse_degree(text):
    doc = _fields(_load(text), {"degrees"}, what="degree map")
    degrees = {}
    for rec in _list(doc["degrees"], "degrees"):
        _fields(rec, DEGREE_FIELDS, what="degree")
        a = _int(rec["arrow"], "arrow id")
        if a in degrees:
            raise SurfaceError("malformed document: arrow {0} listed twice".format(a))
        degrees[a] = _int(rec["degree"], "degree")
    return DegreeMap(degrees)


def dump_degree(d):
    return _dump({"degrees": [{"arrow": a, "degree": v} for a, v in d.items()]})


def parse_curve(text):
    doc = _fields(_load(text), {"steps"}, what="curve")
    steps = []
    for rec in _list(doc["steps"], "steps"):
        _fields(rec, STEP_FIELDS, what="step")
        steps.append((_int(rec["triangle"], "triangle"), _int(rec["entry"], "entry"),
                      _int(rec["exit"], "exit")))
    return CrossingWord(steps)


def dump_curve(curve):
    return _dump({"steps": [{"triangle": s.triangle, "entry": s.entry, "exit": s.exit}
                            for s in curve]})


def parse_report(text):
    return _load(text)


def dump_report(report):
    return json.dumps(report, sort_keys=True) + "\n"


def _read(path):
    try:
        with open(path) as f:
            return f.read()
    except (IOError, OSError) as err:
        raise SurfaceError("cannot read {0}: {1}".format(path, err))


def read_surface(path, log=_default_log):
    return parse_surface(_read(path), log=log)


def read_degree(path):
    return parse_degree(_read(path))


def read_curve(path):
    return parse_curve(_read(path))


def write_fixture(fixture, outdir, log=_default_log):
    """surface, cut and curves a, b, c of a GradedFixture as five files"""
    if not os.path.isdir(outdir):
        os.makedirs(outdir)
    texts = {'surface': dump_surface(fixture.surface), 'cut': dump_degree(fixture.degree),
             'a': dump_curve(fixture.a), 'b': dump_curve(fixture.b), 'c': dump_curve(fixture.c)}
    paths = {}
    for key, text in texts.items():
        paths[key] = os.path.join(outdir, FILE_NAMES[key])
        with open(paths[key], 'w') as f:
            f.write(text)
    log.info("wrote {0} to {1}".format(fixture.spec, outdir))
    return paths
