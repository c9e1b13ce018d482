"""Utility modules for fplab: errors, logging and tabular output."""
