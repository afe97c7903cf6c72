"""JSON and markdown renderings of analysis reports."""
from __future__ import annotations

import json
from typing import Any, Dict, List, Literal, Union

from jinja2 import Environment, StrictUndefined
from pydantic import BaseModel

SCHEMA_VERSION = 1

Report = Union[Dict[str, Any], List[Dict[str, Any]]]

MARKDOWN_TEMPLATE = """\
{%- macro table(t) -%}
| | {{ t.labels | join(" | ") }} |
|---|{% for _ in t.labels %}---|{% endfor %}
{% for row in t.matrix -%}
| **{{ t.labels[loop.index0] }}** | {{ row | join(" | ") }} |
{% endfor -%}
{%- endmacro -%}
{%- for report in reports -%}
# {{ report.command }}: {{ report.source }}

Status: **{{ report.status }}**{% if report.exit_code is defined %} (exit {{ report.exit_code }}){% endif %}

{% if report.error is defined -%}
Error (`{{ report.error.type }}`): {{ report.error.message }}
{% if report.error.line is defined %}at line {{ report.error.line }}, column {{ report.error.column }}
{% endif %}
{% endif -%}
{% if report.algebra is defined -%}
## Algebra

- vertices: {{ report.algebra.vertices | join(", ") }}
- arrows: {% for a in report.algebra.arrows %}{{ a.label }}: {{ a.source }} -> {{ a.target }}{% if not loop.last %}, {% endif %}{% endfor %}
- relations: {{ report.algebra.relations | join(", ") if report.algebra.relations else "none" }}
- dimension: {{ report.algebra.dimension }} over {{ report.algebra.field }}
{% if report.algebra.kupisch_series is defined %}- Kupisch series: {% for v, n in report.algebra.kupisch_series.items() %}{{ v }}={{ n }}{% if not loop.last %}, {% endif %}{% endfor %}
{% endif -%}
{% if report.algebra.gluing is defined %}- gluing: {{ report.algebra.gluing.kind }} node over {{ report.algebra.gluing.components | join(", ") }}
{% if report.algebra.gluing.cross_paths %}- cross-component paths: {{ report.algebra.gluing.cross_paths | join(", ") }}
{% endif %}{% endif %}
{% endif -%}
{% if report.certificates is defined -%}
## Gorenstein dimension

- Gorenstein: {{ report.certificates.gorenstein }}
- Gd: {{ report.certificates.gd }}
- status: {{ report.certificates.status }}

| vertex | id P(v) | pd I(v) |
|---|---|---|
{% for v, cert in report.certificates.id_projectives | dictsort -%}
| {{ v }} | {{ cert.kind }}{% if cert.value is not none %} {{ cert.value }}{% endif %} | {{ report.certificates.pd_injectives[v].kind }}{% if report.certificates.pd_injectives[v].value is not none %} {{ report.certificates.pd_injectives[v].value }}{% endif %} |
{% endfor %}
{% endif -%}
{% if report.gproj is defined -%}
## Gorenstein projectives

{{ report.gproj.labels | length }} nonprojective indecomposable(s), strategy {{ report.gproj.strategy }}; {{ report.gproj.note }}

{% for label in report.gproj.labels -%}
- {{ label }}: dimension vector {{ report.gproj.dimension_vectors[loop.index0] | join(" ") }}
{% endfor %}
{% endif -%}
{% if report.tables is defined and report.tables.stable is defined and report.tables.stable.labels -%}
## Stable Hom

{{ table(report.tables.stable) }}
{% endif -%}
{% if report.tables is defined and report.tables.orbits is defined and report.tables.orbits -%}
Ω-orbits: {% for orbit in report.tables.orbits.orbits %}({{ orbit | join(" -> ") }}){% if not loop.last %}, {% endif %}{% endfor %}

{% endif -%}
{% if report.verdicts is defined -%}
## Verdicts

{% for v in report.verdicts -%}
- {{ v.check }}: {{ "undetermined" if v.undetermined else ("pass" if v.passed else "fail") }}
{% if v.evidence.table is defined and v.evidence.labels is defined -%}
{{ table({"labels": v.evidence.labels, "matrix": v.evidence.table}) }}
{% if v.evidence.blocks is defined %}Blocks: {{ v.evidence.blocks }}
{% endif %}
{% endif -%}
{% if v.counterexample %}  counterexample: `{{ v.counterexample | tojson }}`
{% endif -%}
{% endfor %}
{% endif -%}
{% endfor -%}
"""


def to_jsonable(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def emit_report(report: Report, fmt: Literal["json", "md"] = "json") -> str:
    """Deterministic rendering: sorted JSON keys, no timestamps."""
    data = to_jsonable(report)
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    reports = data if isinstance(data, list) else [data]
    if not reports:
        return "[]\n"
    env = Environment(undefined=StrictUndefined, autoescape=False, trim_blocks=False)
    return env.from_string(MARKDOWN_TEMPLATE).render(reports=reports)
