import hashlib
from pathlib import Path
from typing import Tuple
from zreorder.core.exceptions import SpecFileException
from zreorder.core.logging import get_logger

logger = get_logger(__name__)

class SpecFileManager:
    """Gestionnaire des fichiers de spécification et des diagrammes."""

    @staticmethod
    def digest(data: bytes) -> str:
        """Empreinte SHA-256 des octets bruts d'une entrée."""
        return hashlib.sha256(data).hexdigest()

    def read_spec(self, path: Path) -> Tuple[str, str]:
        """
        Lit un fichier de spécification.

        Args:
            path: Chemin du fichier

        Returns:
            Tuple[str, str]: Texte décodé et empreinte des octets bruts

        Raises:
            SpecFileException: Si le fichier est illisible ou n'est pas de l'UTF-8
        """
        try:
            data = Path(path).read_bytes()
        except OSError as e:
            logger.error(f"Erreur lors de la lecture de {path} : {str(e)}")
            raise SpecFileException(str(path), e.strerror or str(e))

        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise SpecFileException(str(path), f"encodage invalide à l'octet {e.start}")

        logger.info(f"Spécification lue : {path} ({len(data)} octets)")
        return text, self.digest(data)

    def write_text(self, path: Path, content: str) -> Path:
        """
        Écrit un fichier texte, en créant le répertoire parent si besoin.

        Args:
            path: Chemin du fichier
            content: Contenu à écrire

        Returns:
            Path: Chemin écrit

        Raises:
            SpecFileException: Si une erreur survient lors de l'écriture
        """
        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(content, encoding="utf-8")
        except OSError as e:
            logger.error(f"Erreur lors de l'écriture de {target} : {str(e)}")
            raise SpecFileException(str(target), e.strerror or str(e))

        logger.info(f"Fichier écrit : {target}")
        return target

# Instance globale du gestionnaire de fichiers
spec_file_manager = SpecFileManager()
