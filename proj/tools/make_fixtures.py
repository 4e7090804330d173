#!/usr/bin/env python3
"""Regenerates the bundled test fixtures under fixtures/.

The replay projects are synthetic: every issue is a marker such as
BUG-A-0001 on its own source line. The mock analyzer reports each marker,
and the mock provider's tiers rewrite markers by class (A: cheap and
advanced, B: advanced only, C: never), so the per-type outcome counts are
fixed by construction.
"""

import json
import shutil
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent / "fixtures"

TYPES = [("BUG", "BUG", "Resolve defect marker {match}."),
         ("VULN", "VULNERABILITY", "Resolve vulnerability marker {match}."),
         ("SMELL", "CODE_SMELL", "Resolve code smell marker {match}.")]

EXTENSIONS = [
    ("py", "# {}"),
    ("js", "// {}"),
    ("java", "// {}"),
    ("yaml", "# {}"),
    ("go", "// {}"),
]

DIRS = ["api", "api/handlers", "core", "core/model", "deploy", "ui/components", "ui/pages", "tools"]


def csv_field(s):
    if any(c in s for c in ',"\r\n'):
        return '"' + s.replace('"', '""') + '"'
    return s


def write_replay(name, files, counts):
    """counts: {prefix: {"A": n, "B": n, "C": n}}"""
    base = ROOT / name
    if base.exists():
        shutil.rmtree(base)
    project = base / "Project"
    markers = []
    for prefix, _, _ in TYPES:
        for cls in "ABC":
            for k in range(counts[prefix][cls]):
                markers.append(f"{prefix}-{cls}-{k + 1:04d}")
    # Spread markers over files deterministically.
    per_file = [[] for _ in range(files)]
    for idx, m in enumerate(markers):
        per_file[(idx * 7) % files].append(m)

    issues = []
    for f in range(files):
        ext, comment = EXTENSIONS[f % len(EXTENSIONS)]
        rel = f"{DIRS[f % len(DIRS)]}/module_{f:03d}.{ext}"
        lines = [comment.format(f"module {f:03d}"), ""]
        for j, m in enumerate(per_file[f]):
            lines.append(f"value_{j} = step({j})  " + comment.format(m))
        lines.append("")
        lines.append(comment.format("end"))
        path = project / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("\n".join(lines) + "\n")
        for ln, text in enumerate(lines, start=1):
            for prefix, type_name, template in TYPES:
                for cls in "ABC":
                    tag = f"{prefix}-{cls}-"
                    pos = text.find(tag)
                    if pos >= 0:
                        match = text[pos:pos + len(tag) + 4]
                        issues.append((rel, rel.rsplit("/", 1)[-1], ln, template.replace("{match}", match), type_name))
    issues.sort(key=lambda r: (r[0], r[2], r[3]))
    with open(base / "issues.csv", "w", newline="") as fh:
        fh.write("File_Location,File_Name,Line,Message,Type\n")
        for r in issues:
            fh.write(",".join(csv_field(str(x)) for x in r) + "\n")

    analyzer = {"rules": [{"path": "**", "pattern": f"{prefix}-[ABC]-[0-9]{{4}}", "message": template, "type": t}
                          for prefix, t, template in TYPES]}
    (base / "mock_analyzer.json").write_text(json.dumps(analyzer, indent=2) + "\n")
    provider = {
        "tiers": {"gpt-3.5-turbo": "cheap", "gpt-4o-mini": "cheap", "gpt-4o": "advanced"},
        "fence": True,
        "rules": [
            {"tier": "cheap", "action": "replace",
             "edits": [{"pattern": "(BUG|VULN|SMELL)-A-([0-9]{4})", "replacement": "fixed $2"}]},
            {"tier": "advanced", "action": "replace",
             "edits": [{"pattern": "(BUG|VULN|SMELL)-[AB]-([0-9]{4})", "replacement": "fixed $2"}]},
        ],
    }
    (base / "mock_provider.json").write_text(json.dumps(provider, indent=2) + "\n")


SAMPLE_FILES = {
    "client/src/App.jsx": """import React from 'react';
import { BrowserRouter, Routes, Route } from 'react-router-dom';
import OfflineControl from './components/OfflineControl';
import Dashboard from './pages/Dashboard';

function App() {
  const routes = [
    { path: '/', element: <Dashboard /> },
  ];

  return (
    <>
      <BrowserRouter>
        <OfflineControl />
        <Routes>
          {routes.map((r) => (
            <Route key={r.path} path={r.path} element={r.element} />
          ))}
        </Routes>
      </BrowserRouter>
    </>
  );
}

export default App;
""",
    "deploy/helm/dis/deployment.yaml": """apiVersion: apps/v1
kind: Deployment
metadata:
  name: dis
  labels:
    app: dis
spec:
  replicas: 2
  selector:
    matchLabels:
      app: dis
  template:
    metadata:
      labels:
        app: dis
    spec:
      containers:
        - name: dis
          image: registry.example.com/dis:1.4.2
          resources:
            requests:
              cpu: 250m
              memory: 256Mi
            limits:
              memory: 512Mi
          ports:
            - containerPort: 8080
""",
}


def offline_control():
    head = [
        "import React, { useEffect, useState } from 'react';",
        "",
        "// Shows connectivity state and lets the user retry a sync.",
        "export default function OfflineControl() {",
        "  const [online, setOnline] = useState(navigator.onLine);",
        "  const [pending, setPending] = useState(0);",
        "",
        "  useEffect(() => {",
        "    const up = () => setOnline(true);",
        "    const down = () => setOnline(false);",
        "    window.addEventListener('online', up);",
        "    window.addEventListener('offline', down);",
        "    return () => {",
        "      window.removeEventListener('online', up);",
        "      window.removeEventListener('offline', down);",
        "    };",
        "  }, []);",
        "",
    ]
    body = []
    n = 0
    while len(head) + len(body) < 110:
        body.append(f"  const label{n} = 'status-{n}';")
        n += 1
    tail = [
        "",
        "  const retry = () => setPending(pending + 1);",
        "",
        "  return (",
        "    <div className=\"offline-control\">",
        "      <div className=\"offline-badge\" onClick={retry}>",
        "        {online ? 'Online' : 'Offline'} ({pending})",
        "      </div>",
        "    </div>",
        "  );",
        "}",
    ]
    lines = head + body + tail
    assert lines[115].startswith("      <div className=\"offline-badge\" onClick"), lines[115]
    return "\n".join(lines) + "\n"


def write_sample():
    base = ROOT / "sample"
    if base.exists():
        shutil.rmtree(base)
    project = base / "Project"
    files = dict(SAMPLE_FILES)
    files["client/src/components/OfflineControl.jsx"] = offline_control()
    for rel, text in files.items():
        p = project / rel
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(text)

    rows = [
        ("client/src/App.jsx", 12, "A fragment with only one child is redundant.", "CODE_SMELL"),
        ("client/src/components/OfflineControl.jsx", 116,
         "Visible, non-interactive elements with click handlers must have at least one keyboard listener.", "BUG"),
        ("deploy/helm/dis/deployment.yaml", 20, "Specify a CPU limit for this container.", "VULNERABILITY"),
    ]
    # Sanity: the flagged lines are the ones the messages talk about.
    assert files["client/src/App.jsx"].splitlines()[11].strip() == "<>"
    assert "resources:" in files["deploy/helm/dis/deployment.yaml"].splitlines()[19]

    with open(base / "issues.csv", "w", newline="") as fh:
        fh.write("File_Location,File_Name,Line,Message,Type\n")
        for loc, line, msg, t in rows:
            fh.write(",".join(csv_field(str(x)) for x in (loc, loc.rsplit("/", 1)[-1], line, msg, t)) + "\n")

    sonar = {"project_key": "eagle-dis", "token": "squ_fixture_token", "issues": [
        {"key": f"AX-{i + 1}", "component": f"eagle-dis:{loc}", "line": line, "message": msg, "type": t,
         "severity": "MAJOR", "status": "OPEN"}
        for i, (loc, line, msg, t) in enumerate(rows)]}
    (base / "sonar_fixture.json").write_text(json.dumps(sonar, indent=2) + "\n")

    fixed = base / "fixed"
    app = files["client/src/App.jsx"].splitlines()
    app_fixed = app[:11] + [l[2:] for l in app[12:19]] + app[20:]
    oc = files["client/src/components/OfflineControl.jsx"].splitlines()
    oc_fixed = oc[:115] + [
        "      <div",
        "        className=\"offline-badge\"",
        "        role=\"button\"",
        "        tabIndex={0}",
        "        onClick={retry}",
        "        onKeyDown={(e) => e.key === 'Enter' && retry()}",
        "      >",
    ] + oc[116:]
    dep = files["deploy/helm/dis/deployment.yaml"].splitlines()
    dep_fixed = dep[:25] + ["              cpu: 500m"] + dep[25:]
    for rel, lines in (("App.jsx", app_fixed), ("OfflineControl.jsx", oc_fixed), ("deployment.yaml", dep_fixed)):
        p = fixed / rel
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text("\n".join(lines) + "\n")

    provider = {
        "tiers": {"gpt-3.5-turbo": "cheap", "gpt-4o-mini": "cheap", "gpt-4o": "advanced"},
        "fence": True,
        "rules": [
            {"path": "client/src/App.jsx", "action": "fix", "content_file": "fixed/App.jsx"},
            {"path": "**/OfflineControl.jsx", "action": "fix", "content_file": "fixed/OfflineControl.jsx"},
            {"path": "deploy/**", "action": "fix", "content_file": "fixed/deployment.yaml"},
        ],
    }
    (base / "mock_provider.json").write_text(json.dumps(provider, indent=2) + "\n")


def write_ledgers():
    base = ROOT / "ledgers"
    base.mkdir(parents=True, exist_ok=True)
    exp1 = [
        ("BUG", "CheapOnly", 234, 117, "1.68"), ("BUG", "AdvancedOnRemaining", 117, 117, "3.08"),
        ("BUG", "AdvancedOnly", 234, 234, "6.20"),
        ("VULNERABILITY", "CheapOnly", 61, 59, "0.25"), ("VULNERABILITY", "AdvancedOnRemaining", 2, 2, "0.13"),
        ("VULNERABILITY", "AdvancedOnly", 61, 61, "1.01"),
        ("CODE_SMELL", "CheapOnly", 7304, 3718, "8.13"), ("CODE_SMELL", "AdvancedOnRemaining", 3586, 2219, "18.69"),
        ("CODE_SMELL", "AdvancedOnly", 7304, 5937, "32.57"),
    ]
    exp2 = [
        ("BUG", "CheapOnly", 21, 19, "0.31"), ("BUG", "AdvancedOnRemaining", 2, 2, "0.59"),
        ("BUG", "AdvancedOnly", 21, 21, "2.19"),
        ("VULNERABILITY", "CheapOnly", 2, 2, "0.01"), ("VULNERABILITY", "AdvancedOnRemaining", 0, 0, "0.00"),
        ("VULNERABILITY", "AdvancedOnly", 2, 2, "0.11"),
        ("CODE_SMELL", "CheapOnly", 401, 369, "1.05"), ("CODE_SMELL", "AdvancedOnRemaining", 32, 28, "0.66"),
        ("CODE_SMELL", "AdvancedOnly", 401, 397, "8.35"),
    ]
    for name, rows, title in (("experiment1.csv", exp1, "Experiment 1 (563 files, 7,599 issues)"),
                              ("experiment2.csv", exp2, "Experiment 2 (open-source repository)")):
        with open(base / name, "w", newline="") as fh:
            fh.write(f"# {title}\n")
            fh.write("issue_type,strategy,total,resolved,cost\n")
            for r in rows:
                fh.write(",".join(str(x) for x in r) + "\n")


if __name__ == "__main__":
    write_sample()
    write_ledgers()
    write_replay("experiment1", 563, {"BUG": {"A": 117, "B": 117, "C": 0},
                                      "VULN": {"A": 59, "B": 2, "C": 0},
                                      "SMELL": {"A": 3718, "B": 2219, "C": 1367}})
    write_replay("experiment2", 40, {"BUG": {"A": 19, "B": 2, "C": 0},
                                     "VULN": {"A": 2, "B": 0, "C": 0},
                                     "SMELL": {"A": 369, "B": 28, "C": 4}})
