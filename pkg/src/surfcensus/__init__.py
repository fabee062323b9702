"""Embedded graphs on surfaces."""
