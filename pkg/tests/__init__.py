"""
Tests for the rarr-sim package
"""
