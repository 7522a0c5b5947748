"""
pitkit - 内传递置换群的计算工具包

构造带非平凡中心化子的内传递群、提取其拟本原商、判定特殊对，
并对照内置目录批量验证。
"""

__version__ = "0.1.0"
