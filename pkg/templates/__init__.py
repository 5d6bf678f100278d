"""Jinja2-Templates fuer die Markdown-Berichte der Verifikationssuiten."""
