#!/usr/bin/env python3
"""CLI contract: schema-valid JSON, byte-identical reruns, DOT grammar and exit codes."""
import argparse
import json
import pathlib
import re
import subprocess
import sys
import tempfile

import jsonschema

OK, FAILURE, USAGE = 0, 1, 2


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    ap.add_argument("--fixtures", required=True, type=pathlib.Path)
    args = ap.parse_args()
    fx = args.fixtures
    failures = []

    def schema(name):
        return json.loads((args.schemas / f"{name}.schema.json").read_text())

    def run(argv):
        return subprocess.run([args.cli, *argv], capture_output=True, text=True)

    def expect(argv, code, schema_name=None, repeat=True):
        first = run(argv)
        label = " ".join(argv)
        if first.returncode != code:
            failures.append(f"{label}: exit {first.returncode}, expected {code}: {first.stderr.strip()}")
            return None
        if repeat:
            second = run(argv)
            if second.stdout != first.stdout:
                failures.append(f"{label}: output differs between runs")
        if schema_name is None:
            return first.stdout
        try:
            doc = json.loads(first.stdout)
            jsonschema.validate(doc, schema(schema_name))
        except (json.JSONDecodeError, jsonschema.ValidationError) as err:
            failures.append(f"{label}: {str(err).splitlines()[0]}")
            return None
        return doc

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)

        for name in ["curve_fixture"]:
            for path in sorted(fx.glob("*_f*.json")):
                try:
                    jsonschema.validate(json.loads(path.read_text()), schema(name))
                except jsonschema.ValidationError as err:
                    failures.append(f"{path.name}: {err.message}")

        doc = expect(["subgroups", "--level", "6"], OK, "subgroups")
        if doc and doc["count"] != 30:
            failures.append("subgroups --level 6: count != 30")
        expect(["labels", "--level", "4", "--char", "2"], OK, "labels")
        doc = expect(["strata", "--kind", "gamma1", "--char", "2", "--exp", "3", "--oracle", "--jobs", "2"], OK, "strata")
        if doc and (doc["total"] != 48 or not doc["oracle_agrees"]):
            failures.append("strata gamma1 p=2 n=3: wrong total or oracle disagreement")
        expect(["strata", "--kind", "gK", "--char", "3", "--exp", "1", "--K", "0,0;0,0"], OK, "strata")
        expect(["oracle", "fss", "--char", "3", "--a", "1", "--e", "1"], OK, "oracle_fss")

        for family, level, char in [("h1", "6", "3"), ("h", "3", "3"), ("h", "4", "2"), ("h1", "8", "2")]:
            doc = expect(["graph", "--family", family, "--level", level, "--char", char], OK, "graph_report")
            if doc and not doc["consistency"]["passed"]:
                failures.append(f"graph {family} {level}: consistency failed")
            out = tmp / f"{family}{level}.json"
            dot = tmp / f"{family}{level}.dot"
            expect(["graph", "--family", family, "--level", level, "--char", char, "--json", str(out), "--dot", str(dot)],
                   OK, repeat=False)
            try:
                jsonschema.validate(json.loads(out.read_text()), schema("graph"))
            except jsonschema.ValidationError as err:
                failures.append(f"graph --json {family} {level}: {err.message}")
            check_dot(dot.read_text(), json.loads(out.read_text()), failures)

        expect(["verify-torsor", "--fixture", str(fx / "full5_f841.json"), "--N", "5", "--point", "Q"], OK, "torsor_report")
        doc = expect(["verify-torsor", "--fixture", str(fx / "full5_f841.json"), "--N", "5", "--point", "Q",
                      "--partner", "Qprime"], FAILURE, "torsor_report")
        if doc and doc["passed"]:
            failures.append("negative control reported as passed")
        expect(["verify-torsor", "--fixture", str(fx / "isogeny5_f31.json"), "--N", "5"], FAILURE, "torsor_report")
        expect(["verify-label", "--fixture", str(fx / "ordinary_f125.json"), "--point", "P", "--exp", "3"], OK,
               "label_report")

        gamma1 = tmp / "gamma1.json"
        gamma1.write_text(json.dumps({"p": 7, "elements": [{"unit": 1, "component": 1}]}))
        doc = expect(["polygon", "--d", "3", "--level", "3", "--check", "gamma1", "--input", str(gamma1), "--classes"],
                     OK, "polygon_report")
        if doc and not doc["passed"]:
            failures.append("polygon (1, 1) with d = N should pass")
        doc = expect(["polygon", "--d", "1", "--level", "3", "--check", "gamma1", "--input", str(gamma1)], OK,
                     "polygon_report")
        if doc and doc["passed"]:
            failures.append("polygon (1, 1) with d = 1, N = 3 should fail")
        gamma = tmp / "gamma.json"
        gamma.write_text(json.dumps({"p": 7, "elements": [{"unit": 2, "component": 0}, {"unit": 1, "component": 1}]}))
        expect(["polygon", "--d", "3", "--level", "3", "--check", "gamma", "--input", str(gamma)], OK, "polygon_report")
        for path in [gamma1, gamma]:
            jsonschema.validate(json.loads(path.read_text()), schema("polygon_input"))

        expect(["graph", "--family", "h1", "--level", "5", "--char", "3"], USAGE, repeat=False)
        expect(["graph", "--family", "h1", "--level", "64", "--char", "2"], USAGE, repeat=False)
        expect(["strata", "--kind", "gamma1", "--char", "4", "--exp", "1"], USAGE, repeat=False)
        expect(["subgroups"], USAGE, repeat=False)
        expect(["no-such-command"], USAGE, repeat=False)
        expect(["strata", "--kind", "gK", "--char", "2", "--exp", "1", "--K", "1,2,3"], USAGE, repeat=False)

    for f in failures:
        print("FAIL", f)
    print(f"{'PASS' if not failures else 'FAIL'}: cli contract ({len(failures)} failures)")
    return 0 if not failures else 1


NODE_ID = re.compile(r"^(Z\[b=\d+\]\[r=\d+\]|(A\[\d+\]/)?lambda\[\d+\])$")
QUOTED = r'"(?:[^"\\]|\\["\\])*"'


def check_dot(text, graph, failures):
    lines = text.split("\n")
    if lines[-1] != "":
        failures.append("dot: missing final newline")
    lines = lines[:-1]
    ctx = graph["context"]
    name = f'{ctx["family"]}_N{ctx["N"]}_p{ctx["char"]}'
    expected_head = [f'graph "{name}" {{', f"  // {graph['crossings']}", "  node [shape=record];"]
    if lines[:3] != expected_head:
        failures.append(f"dot {name}: header mismatch")
        return
    nodes = graph["nodes"]
    body = lines[3:]
    if len(body) != 2 * len(nodes) + 2 or body[-1] != "}":
        failures.append(f"dot {name}: wrong number of lines")
        return
    node_re = re.compile(rf"^  ({QUOTED}) \[label=({QUOTED})\];$")
    for line, node in zip(body, nodes):
        m = node_re.match(line)
        if not m or not NODE_ID.match(node["id"]):
            failures.append(f"dot {name}: bad node line {line!r}")
            continue
        fmt = lambda v: "?" if v is None else str(v)
        if m.group(2) != f'"{node["id"]} | {fmt(node["length"])} | {fmt(node["reduced_degree"])}"':
            failures.append(f"dot {name}: label mismatch for {node['id']}")
    if body[len(nodes)] != '  "supersingular" [shape=point];':
        failures.append(f"dot {name}: missing supersingular point")
    for line, node in zip(body[len(nodes) + 1:], nodes):
        if line != f'  "{node["id"]}" -- "supersingular";':
            failures.append(f"dot {name}: bad edge {line!r}")


if __name__ == "__main__":
    sys.exit(main())
