"""Kommandozeilen-Einstiegspunkte."""
