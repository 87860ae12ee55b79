from pydantic import BaseModel

# Base immuable pour tous les schémas du domaine
class FrozenSchema(BaseModel):
    class Config:
        frozen = True
        smart_union = True
        copy_on_model_validation = "none"
