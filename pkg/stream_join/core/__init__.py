"""Core engines - 축약, 조인, DRSP 파이프라인"""
