"""Mutation testing and vulnerability injection for Solidity smart contracts."""

__version__ = "0.1.0"
