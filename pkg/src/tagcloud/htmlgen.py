"""HTML emission.

Inline layouts render as spans separated by spaces and line breaks;
2-D placements render the slicing tree as nested two-cell tables, so
any browser reproduces the packing without absolute positioning.  All
documents embed the stylesheet, one element per line, which keeps them
self-contained and diff-friendly.
"""

from __future__ import annotations

from html import escape
from typing import Iterable

from .model import Cloud, InvalidInputError, LineLayout, PlacedCloud
from .tree import Leaf, Node

# The estimator assumes 1.25 em line boxes; the stylesheet must agree.
LINE_HEIGHT = "1.25"


def emit_css() -> str:
    """Stylesheet for both inline and nested-table clouds."""

    rules = [
        f".cloud {{ font-family: Arial, Helvetica, sans-serif; line-height: {LINE_HEIGHT}; }}",
        ".cloud table { border-collapse: separate; border-spacing: 0; }",
        ".cloud td { padding: 0; vertical-align: top; }",
        ".cloud span { white-space: nowrap; }",
    ]
    for level in range(10):
        rules.append(f".tag{level} {{ font-size: {8 + 4 * level}pt; }}")
    rules += [
        "/* squeezed and stretched shape variants; real font stretching is",
        "   unreliable across browsers, so letter spacing and weight stand in */",
        ".narrow { letter-spacing: -0.5px; font-stretch: condensed; }",
        ".wide { letter-spacing: 0.5px; font-stretch: expanded; font-weight: 600; }",
    ]
    return "\n".join(rules) + "\n"


def _document(body_lines: Iterable[str], title: str) -> str:
    head = [
        "<!DOCTYPE html>",
        "<html>",
        "<head>",
        '<meta charset="utf-8">',
        f"<title>{escape(title)}</title>",
        "<style>",
        emit_css().rstrip("\n"),
        "</style>",
        "</head>",
        "<body>",
    ]
    tail = ["</body>", "</html>", ""]
    return "\n".join(head + list(body_lines) + tail)


def _span(cloud: Cloud, idx: int, extra_class: str = "",
          href_template: str | None = None) -> str:
    tag = cloud.tags[idx]
    classes = f"tag{tag.weight}" + (f" {extra_class}" if extra_class else "")
    label = escape(tag.label)
    if href_template is None:
        return f'<span class="{classes}">{label}</span>'
    href = escape(href_template.format(label=tag.label), quote=True)
    return f'<a class="{classes}" href="{href}">{label}</a>'


def emit_inline(layout: LineLayout, cloud: Cloud,
                href_template: str | None = None, title: str = "tag cloud") -> str:
    """One span per tag, spaces within a line, <br> between lines.

    Labels are HTML-escaped and never split.
    """

    flat = sorted(i for line in layout.lines for i in line)
    if flat != list(range(len(cloud.tags))):
        raise InvalidInputError("layout does not place every tag exactly once")
    body = ['<div class="cloud">']
    for li, line in enumerate(layout.lines):
        if li:
            body.append("<br>")
        # one span per source line; newlines between spans render as
        # the single inter-tag spaces the widths were computed with
        for idx in line:
            body.append(_span(cloud, idx, href_template=href_template))
    body.append("</div>")
    return _document(body, title)


def emit_nested_tables(tree: Node, placed: PlacedCloud, cloud: Cloud,
                       href_template: str | None = None,
                       title: str = "tag cloud") -> str:
    """Render a slicing tree as nested tables.

    A V cut is a one-row, two-cell table; an H cut two rows of one
    cell.  Leaves become spans classed by weight, plus a variant class
    when the placed box is squeezed or stretched relative to the tag's
    default box.
    """

    from .tree import leaves

    placed_tags = placed.by_tag()
    tree_tags = sorted(leaves(tree))
    if tree_tags != sorted(placed_tags) or len(tree_tags) != len(set(tree_tags)):
        raise InvalidInputError("tree and placement disagree on the tag set")

    def variant_class(idx: int) -> str:
        tag = cloud.tags[idx]
        w = placed_tags[idx].width
        if w < tag.width:
            return "narrow"
        if w > tag.width:
            return "wide"
        return ""

    def render(node: Node, out: list[str]) -> None:
        if isinstance(node, Leaf):
            out.append(_span(cloud, node.tag, variant_class(node.tag), href_template))
            return
        out.append("<table>")
        out.append("<tr>")
        out.append("<td>")
        render(node.first, out)
        out.append("</td>")
        if node.orient == "V":
            out.append("<td>")
            render(node.second, out)
            out.append("</td>")
            out.append("</tr>")
        else:
            out.append("</tr>")
            out.append("<tr>")
            out.append("<td>")
            render(node.second, out)
            out.append("</td>")
            out.append("</tr>")
        out.append("</table>")

    body = ['<div class="cloud">']
    render(tree, body)
    body.append("</div>")
    return _document(body, title)
