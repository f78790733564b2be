"""Tests for smallcovers.util"""
