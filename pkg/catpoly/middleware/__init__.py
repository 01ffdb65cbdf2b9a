"""CLI middleware"""
