"""Step to load and validate the input document."""

import asyncio

from src.agiform import make_agiform
from src.errors import DocumentError
from src.geometry import validate_simplex
from src.models.documents import SimplexDocument
from src.services.pipeline import PipelineContext, PipelineStep


class LoadDocumentStep(PipelineStep):
    """Parse the simplex document and build the simplex (and agiform, when an apex is given)."""

    def __init__(self, input_path: str | None, require_apex: bool = False):
        """Initialize the step.

        Args:
            input_path: Path of the JSON input document
            require_apex: Fail when the document has no apex
        """
        super().__init__("LoadDocument")
        self.input_path = input_path
        self.require_apex = require_apex

    async def execute(self, context: PipelineContext) -> bool:
        if not self.input_path:
            raise DocumentError(f"Command {context.command!r} needs an input file")

        context.document = await asyncio.to_thread(SimplexDocument.from_file, self.input_path)
        document = context.document
        context.simplex = validate_simplex(document.vertices)

        if document.apex is not None:
            context.agiform = make_agiform(
                context.simplex,
                document.apex,
                document.scale if document.scale is not None else 1,
            )
        elif self.require_apex:
            raise DocumentError(f"Command {context.command!r} needs an apex in the input")

        self.logger.info(
            "Loaded input document",
            n=context.simplex.n,
            degree_sum=context.simplex.degree_sum,
            has_apex=document.apex is not None,
            digest=document.digest(),
        )
        return True
