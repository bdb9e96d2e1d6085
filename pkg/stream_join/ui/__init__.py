"""User interface - click CLI와 rich 출력"""
