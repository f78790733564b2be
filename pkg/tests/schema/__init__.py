"""Tests for smallcovers.schema"""
