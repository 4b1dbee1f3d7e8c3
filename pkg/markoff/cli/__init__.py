from .run import main as markoff
