"""Locally complete intersection Stanley-Reisner ideals and powers."""
