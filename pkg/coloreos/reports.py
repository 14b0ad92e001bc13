from io import BytesIO

from reportlab.lib.pagesizes import letter
from reportlab.pdfgen import canvas

MARGIN = 72
LINE = 18


def _header(p, height):
    p.setFont("Helvetica-Bold", 16)
    p.drawString(MARGIN, height - MARGIN, "Clasificación de nudos twist")
    p.setFont("Helvetica-Bold", 11)
    y = height - MARGIN - 36
    for x, title in ((MARGIN, "c"), (MARGIN + 40, "Alexander"), (MARGIN + 250, "q"), (MARGIN + 300, "Testigo")):
        p.drawString(x, y, title)
    p.setFont("Helvetica", 11)
    return y - LINE


def twist_table_pdf(rows):
    """Genera el PDF de la tabla (c, Δ, veredicto) y devuelve sus bytes"""
    buffer = BytesIO()
    p = canvas.Canvas(buffer, pagesize=letter)
    width, height = letter
    p.setTitle("Nudos twist")

    y = _header(p, height)
    for c, delta, verdict in rows:
        if y < MARGIN:
            p.showPage()
            y = _header(p, height)
        q_text = ">=8" if verdict.witness is None else str(verdict.q_value)
        p.drawString(MARGIN, y, str(c))
        p.drawString(MARGIN + 40, y, str(delta))
        p.drawString(MARGIN + 250, y, q_text)
        p.drawString(MARGIN + 300, y, verdict.witness_label or "-")
        y -= LINE

    p.showPage()
    p.save()
    buffer.seek(0)
    return buffer.getvalue()
