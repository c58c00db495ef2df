"""Unit test package for ochax."""
