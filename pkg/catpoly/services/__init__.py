"""Business logic for compositions, trees and the verification suite"""
