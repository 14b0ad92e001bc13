import re

from django import forms

from cuandles.quandle_core import (
    LinearQuandleParams,
    QuandleError,
    catalog_names,
    catalog_quandle,
    quandle_from_json,
    verify_quandle_axioms,
)
from diagramas.diagram import DiagramError, load_diagram, named_diagram, parse_diagram

from .twist import twist_diagram

TWIST_NAME = re.compile(r'^twist-(\d+)$')
RANGE = re.compile(r'^\s*(\d+)\s*\.\.\s*(\d+)\s*$')


def form_error_text(form):
    """Aplana los errores de un formulario en una sola línea para la consola"""
    parts = []
    for field, errors in form.errors.items():
        text = ' '.join(errors)
        parts.append(text if field == '__all__' else f"--{field.replace('_', '-')}: {text}")
    return '; '.join(parts)


class FuenteDiagramaForm(forms.Form):
    """Formulario para elegir el diagrama: archivo, texto en línea o nudo incluido"""
    input = forms.CharField(required=False)
    inline = forms.CharField(required=False, strip=False)
    knot = forms.CharField(required=False)
    diagram_format = forms.ChoiceField(
        choices=[('auto', 'auto'), ('triples', 'triples'), ('pd', 'pd')],
        required=False,
    )

    def clean(self):
        cleaned_data = super().clean()
        sources = [name for name in ('input', 'inline', 'knot') if cleaned_data.get(name)]
        if len(sources) != 1:
            raise forms.ValidationError("Indique exactamente una fuente: --input, --inline o --knot.")

        fmt = cleaned_data.get('diagram_format') or 'auto'
        try:
            if cleaned_data.get('input'):
                diagram = load_diagram(cleaned_data['input'], fmt)
            elif cleaned_data.get('inline'):
                text = cleaned_data['inline']
                if fmt == 'auto':
                    fmt = 'pd' if '[' in text else 'triples'
                diagram = parse_diagram(text, fmt, name='inline')
            else:
                diagram = self._named(cleaned_data['knot'])
        except DiagramError as exc:
            raise forms.ValidationError(str(exc)) from exc
        cleaned_data['diagram'] = diagram
        return cleaned_data

    @staticmethod
    def _named(name):
        match = TWIST_NAME.match(name)
        if match:
            c = int(match.group(1))
            if c < 3:
                raise DiagramError(f"twist knots need c >= 3, got {c}")
            return twist_diagram(c)
        return named_diagram(name)


class ParametrosLinealesForm(forms.Form):
    """Formulario para los parámetros (n, l, k) del cuandle lineal"""
    n = forms.IntegerField(min_value=2)
    ell = forms.IntegerField(min_value=1)
    k = forms.IntegerField(min_value=1)

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data
        try:
            cleaned_data['params'] = LinearQuandleParams(cleaned_data['n'], cleaned_data['ell'], cleaned_data['k'])
        except QuandleError as exc:
            raise forms.ValidationError(str(exc)) from exc
        return cleaned_data


class CuandleForm(forms.Form):
    """Cuandle por nombre de catálogo o tabla JSON en línea"""
    quandle = forms.CharField()

    def clean_quandle(self):
        value = self.cleaned_data['quandle']
        try:
            if value.lstrip().startswith('{'):
                quandle = quandle_from_json(value)
                report = verify_quandle_axioms(quandle)
                if not report:
                    raise forms.ValidationError(f"La tabla no es un cuandle: {report.message}")
                return quandle
            return catalog_quandle(value)
        except QuandleError as exc:
            raise forms.ValidationError(
                f"{exc}. Nombres válidos: {', '.join(catalog_names())}."
            ) from exc


class TwistForm(forms.Form):
    """Nudo twist único (--c) o rango A..B (--range)"""
    c = forms.IntegerField(required=False, min_value=3)
    range = forms.CharField(required=False)

    def clean_range(self):
        value = self.cleaned_data.get('range')
        if not value:
            return None
        match = RANGE.match(value)
        if not match:
            raise forms.ValidationError("El rango debe tener la forma A..B.")
        first, last = int(match.group(1)), int(match.group(2))
        if first < 3 or last < first:
            raise forms.ValidationError("El rango debe cumplir 3 <= A <= B.")
        return first, last

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data
        has_c = cleaned_data.get('c') is not None
        has_range = cleaned_data.get('range') is not None
        if has_c == has_range:
            raise forms.ValidationError("Indique --c N o --range A..B (sólo uno).")
        cleaned_data['bounds'] = (cleaned_data['c'], cleaned_data['c']) if has_c else cleaned_data['range']
        return cleaned_data
