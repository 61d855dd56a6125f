"""Runs the CLI shape command and checks the SVG it writes."""

import subprocess
import sys
import tempfile
import xml.etree.ElementTree as ET
from pathlib import Path

NS = "{http://www.w3.org/2000/svg}"

CASES = {
    "one point at infinity": ["0", "1", "i", "inf"],
    "edwards": ["1.34023+1.032i", "-0.4679873-0.3603669i", "-1.34023-1.032i", "0.4679873+0.3603669i"],
    "collinear triple": ["0", "1", "2", "1+i"],
}


def check(tool, name, points, workdir):
    path = Path(workdir) / (name.replace(" ", "_") + ".svg")
    proc = subprocess.run([tool, "shape", *points, "--svg", str(path)], capture_output=True, text=True)
    if proc.returncode != 0:
        return f"{name}: exit {proc.returncode}: {proc.stderr.strip()}"
    root = ET.parse(path).getroot()
    if root.tag != NS + "svg" or root.get("version") != "1.1":
        return f"{name}: root is not an SVG 1.1 element"
    groups = {g.get("id"): g for g in root.iter(NS + "g")}
    for gid in ("circumcircles", "triangles", "points"):
        if gid not in groups:
            return f"{name}: missing group {gid}"
    if len(list(groups["circumcircles"])) != 4:
        return f"{name}: expected four circumcircles"
    paths = groups["triangles"].findall(NS + "path")
    if len(paths) != 4 or any(not p.get("d", "").startswith("M ") for p in paths):
        return f"{name}: expected four triangle paths"
    second = Path(workdir) / "again.svg"
    subprocess.run([tool, "shape", *points, "--svg", str(second)], check=True, capture_output=True)
    if second.read_bytes() != path.read_bytes():
        return f"{name}: output is not deterministic"
    return None


def main():
    tool = sys.argv[1]
    errors = []
    with tempfile.TemporaryDirectory() as workdir:
        for name, points in CASES.items():
            err = check(tool, name, points, workdir)
            if err:
                errors.append(err)
    for err in errors:
        print(err, file=sys.stderr)
    print(f"{len(CASES) - len(errors)}/{len(CASES)} svg documents valid")
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
