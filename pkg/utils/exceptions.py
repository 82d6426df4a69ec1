"""
异常定义

ValidationError 对应输入非法（CLI 退出码 2），GuardError 对应规模保护拒绝
（退出码 3），ConsistencyError 表示内部校验失败（退出码 1）。
"""


class TreecatError(Exception):
    """所有 treecat 异常的基类"""


class ValidationError(TreecatError):
    """输入校验失败"""


class GuardError(TreecatError):
    """规模保护拒绝计算"""


class ConsistencyError(TreecatError):
    """内部一致性证书失败（意味着实现有缺陷）"""


# 图与态射
class InvalidGraph(ValidationError):
    pass


class NotATree(ValidationError):
    pass


class UnknownVertex(ValidationError):
    pass


class UnknownEdge(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class DuplicateVertex(ValidationError):
    pass


class NonSurjective(ValidationError):
    pass


class DisconnectedFiber(ValidationError):
    pass


class EdgeMismatch(ValidationError):
    pass


class Incomposable(ValidationError):
    pass


class InvalidOIMap(ValidationError):
    pass


class NotRootPreserving(ValidationError):
    pass


class NotInjective(ValidationError):
    pass


class InvalidEmbedding(ValidationError):
    pass


class InvalidContraction(ValidationError):
    pass


# 代数
class NotAComplex(ValidationError):
    pass


class NonUnitConstantTerm(ValidationError):
    pass


class WindowTooSmall(ValidationError):
    pass


class OutOfBounds(ValidationError):
    pass


# 拟阵与增长
class NotAFlat(ValidationError):
    pass


class UnknownOracle(ValidationError):
    pass


class SchemaError(ValidationError):
    pass


# 规模保护
class TooLarge(GuardError):
    pass


class BoundsTooLarge(GuardError):
    pass


# 内部证书
class NotClosed(ConsistencyError):
    pass


class AntiPalindromyViolation(ConsistencyError):
    pass
